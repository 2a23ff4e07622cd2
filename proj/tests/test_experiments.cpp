#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ftspanner/experiments.hpp"

using namespace ftspanner;

TEST(Experiments, Median) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_TRUE(std::isnan(median({})));
}

TEST(Experiments, DefaultSpecsCoverEverySuite) {
  for (const std::string& s : suite_names()) {
    const ExperimentSpec spec = default_spec(s);
    EXPECT_EQ(spec.suite, s);
    EXPECT_FALSE(spec.sizes.empty());
  }
  EXPECT_THROW(default_spec("nope"), std::invalid_argument);
}

TEST(Experiments, SmallRunsProduceRowsAndChecks) {
  for (const std::string& s : suite_names()) {
    ExperimentSpec spec = default_spec(s);
    spec.sizes = {64, 128};
    spec.seeds = {1, 2};
    spec.repetitions = 1;
    spec.random_trials = 2;
    spec.adversarial_trials = 2;
    if (s == "ft-trials" || s == "degree-scaling") spec.ks = {0, 1, 2};
    const SuiteResult r = run_suite(spec);
    EXPECT_FALSE(r.table.rows.empty()) << s;
    EXPECT_FALSE(r.checks.empty()) << s;
    for (const auto& row : r.table.rows) {
      EXPECT_EQ(row.size(), r.table.header.size());
      EXPECT_EQ(row.back(), active_constants().version);
    }
    std::ostringstream csv;
    r.table.write_csv(csv);
    EXPECT_EQ(csv.str().substr(0, r.table.header[0].size()), r.table.header[0]);
  }
}

TEST(Experiments, RejectsBadSpecs) {
  ExperimentSpec spec = default_spec("net-counts");
  spec.sizes = {1};
  EXPECT_THROW(run_suite(spec), std::invalid_argument);
  spec = default_spec("ft-trials");
  spec.sizes = {8};
  spec.ks = {7};
  EXPECT_THROW(run_suite(spec), std::out_of_range);
}
