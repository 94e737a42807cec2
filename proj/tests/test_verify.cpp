#include <gtest/gtest.h>

#include "brittle/verify.hpp"

using namespace brittle;

TEST(Verify, QuickSuitesPass) {
  for (const CheckResult& r : {check_figure3(), check_subdivided_k4(), check_figure4(), check_k2n_family(6),
                               check_prop_example(3), check_fan_suite(2)}) {
    EXPECT_TRUE(r.passed) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.cases, 0) << r.name;
  }
}

TEST(Verify, OracleEquivalenceOnFiveVertices) {
  CheckResult r = check_oracle_equivalence(5, {}, 2);
  EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Verify, SmallCorpusChecks) {
  auto corpus = default_corpus(7, 10);
  CheckResult basic = check_observation_basic(corpus, builtin_classes(), {}, 2);
  EXPECT_TRUE(basic.passed) << (basic.failures.empty() ? "" : basic.failures.front());
  CheckResult mono = check_topminor_monotonicity(corpus, builtin_classes(), {});
  EXPECT_TRUE(mono.passed) << (mono.failures.empty() ? "" : mono.failures.front());
}

TEST(Verify, CorpusIsDeterministic) {
  auto a = default_corpus(1, 20);
  auto b = default_corpus(1, 20);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 143u + 20u);
  for (std::size_t i = 143; i < a.size(); ++i) {
    EXPECT_GE(a[i].order(), 7);
    EXPECT_LE(a[i].order(), 10);
  }
  EXPECT_NE(default_corpus(2, 20), a);
}

TEST(Verify, CheckResultCapsFailures) {
  CheckResult r("demo");
  for (int i = 0; i < 40; ++i) r.expect(false, "case " + std::to_string(i));
  r.expect(true, "fine");
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.cases, 41);
  EXPECT_EQ(r.failures.size(), 25u);
}

TEST(Verify, FanPreconditions) {
  EXPECT_THROW(check_fan_lower_bounds(classes::forests(), named::path(3), VertexSet::singleton(0), 2, "P3"),
               ConfigurationError);
}

TEST(Verify, SuiteDispatch) {
  VerifyOptions opt;
  opt.prop_l_max = 2;
  EXPECT_EQ(suite_names().size(), 10u);
  auto results = run_suites({"figure3", "prop-example"}, opt);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_TRUE(all_passed(results));
  EXPECT_THROW(run_suite("nope", opt), std::invalid_argument);
}
