#include "ftspanner/constants.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ftspanner/metric.hpp"

namespace ftspanner {

const Constants& default_constants() {
  static const Constants c = [] {
    Constants k;
    k.version = "1";
    k.eps_scale = 2.6;
    k.c_lambda = 1.0;
    k.c_ft = 1.0;
    k.c_l = 180.0;
    k.c_net = 10.0;
    k.c_sum = 3.0;
    k.mst_low = 0.6;
    k.mst_high = 0.75;
    k.line_low = 14.0;
    k.line_high = 28.0;
    k.max_degree = 1100;
    k.c_hop = 5.0;
    k.c_k = 1100.0;
    k.c_k_light = 230.0;
    k.c_light = 4.0;
    return k;
  }();
  return c;
}

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Constants& c) {
  ordered_json j;
  j["version"] = c.version;
  j["eps_scale"] = c.eps_scale;
  j["c_lambda"] = c.c_lambda;
  j["c_ft"] = c.c_ft;
  j["c_l"] = c.c_l;
  j["c_net"] = c.c_net;
  j["c_sum"] = c.c_sum;
  j["mst_low"] = c.mst_low;
  j["mst_high"] = c.mst_high;
  j["line_low"] = c.line_low;
  j["line_high"] = c.line_high;
  j["max_degree"] = c.max_degree;
  j["c_hop"] = c.c_hop;
  j["c_k"] = c.c_k;
  j["c_k_light"] = c.c_k_light;
  j["c_light"] = c.c_light;
  return j;
}

}  // namespace

std::string constants_to_json(const Constants& c) { return to_json(c).dump(2) + "\n"; }

Constants load_constants(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open constants file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    Constants c;
    c.version = j.at("version").get<std::string>();
    c.eps_scale = j.at("eps_scale").get<double>();
    c.c_lambda = j.at("c_lambda").get<double>();
    c.c_ft = j.at("c_ft").get<double>();
    c.c_l = j.at("c_l").get<double>();
    c.c_net = j.at("c_net").get<double>();
    c.c_sum = j.at("c_sum").get<double>();
    c.mst_low = j.at("mst_low").get<double>();
    c.mst_high = j.at("mst_high").get<double>();
    c.line_low = j.at("line_low").get<double>();
    c.line_high = j.at("line_high").get<double>();
    c.max_degree = j.at("max_degree").get<int>();
    c.c_hop = j.at("c_hop").get<double>();
    c.c_k = j.at("c_k").get<double>();
    c.c_k_light = j.at("c_k_light").get<double>();
    c.c_light = j.at("c_light").get<double>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("constants file " + path.string() + ": " + e.what());
  }
}

const Constants& active_constants() {
  static const Constants c = [] {
    const char* env = std::getenv(kConstantsEnv);
    if (env && *env) return load_constants(env);
    return default_constants();
  }();
  return c;
}

std::filesystem::path bundled_constants_path() { return FTSPANNER_DEFAULT_CONSTANTS_PATH; }

}  // namespace ftspanner
