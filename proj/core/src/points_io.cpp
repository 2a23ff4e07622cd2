#include "ftspanner/points_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>

namespace ftspanner {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_points(std::ostream& out, const PointSet& points) {
  out << "# dim=" << points.dim() << " n=" << points.size() << '\n';
  for (PointId p = 0; p < points.size(); ++p) {
    const auto row = points[p];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << '\t';
      out << format_double(row[k]);
    }
    out << '\n';
  }
}

void save_points(const std::filesystem::path& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_points(out, points);
  if (!out) throw InputError("failed writing " + path.string());
}

PointSet read_points(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("missing header", 1);
  static const std::regex header(R"(# dim=([0-9]+) n=([0-9]+))");
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw InputError("malformed header", 1);
  const int dim = std::stoi(m[1].str());
  const std::size_t n = std::stoull(m[2].str());
  if (dim < 1) throw InputError("dimension must be positive", 1);

  std::vector<double> coords;
  coords.reserve(n * static_cast<std::size_t>(dim));
  std::size_t line_no = 1;
  for (std::size_t row = 0; row < n; ++row) {
    ++line_no;
    if (!std::getline(in, line)) throw InputError("expected " + std::to_string(n) + " rows", line_no);
    const char* p = line.data();
    const char* end = p + line.size();
    for (int k = 0; k < dim; ++k) {
      if (k > 0) {
        if (p == end || *p != '\t') throw InputError("inconsistent dimension", line_no);
        ++p;
      }
      double v = 0.0;
      const auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc() || res.ptr == p) throw InputError("malformed number", line_no);
      if (!std::isfinite(v)) throw InputError("non-finite value", line_no);
      coords.push_back(v);
      p = res.ptr;
    }
    if (p != end) throw InputError("inconsistent dimension", line_no);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw InputError("unexpected extra row", line_no);
  }

  try {
    return PointSet(dim, std::move(coords));
  } catch (const InputError& e) {
    // Rows are 0-based in PointSet's message; report file lines instead.
    static const std::regex dup(R"(duplicate point: rows ([0-9]+) and ([0-9]+))");
    std::smatch dm;
    const std::string what = e.what();
    if (std::regex_match(what, dm, dup)) {
      throw InputError("duplicate point (same as line " + std::to_string(std::stoull(dm[1].str()) + 2) + ")",
                       std::stoull(dm[2].str()) + 2);
    }
    throw;
  }
}

PointSet load_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_points(in);
}

}  // namespace ftspanner
