#include <gtest/gtest.h>

#include "splab/verify.hpp"

using namespace splab;

TEST(Verify, KnownSuites) {
  EXPECT_EQ(known_suites().size(), 10u);
  EXPECT_TRUE(is_known_suite("cho"));
  EXPECT_FALSE(is_known_suite("bogus"));
  EXPECT_THROW(run_suite({"bogus"}), std::invalid_argument);
  VerifyConfig bad{"mixed-jdt"};
  bad.n = -1;
  EXPECT_THROW(run_suite(bad), std::invalid_argument);
}

TEST(Verify, WordCount) {
  SuiteReport r = run_suite({"mixed-jdt"});
  EXPECT_EQ(r.tested, 1092);
  EXPECT_EQ(r.failed, 0);
  EXPECT_EQ(r.bounds, "n=3 len=6");
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(Verify, EverySuitePassesAtSmallBounds) {
  for (const auto& name : known_suites()) {
    VerifyConfig c{name};
    c.n = 2;
    c.max_len = 4;
    c.max_size = 4;
    SuiteReport r = run_suite(c);
    EXPECT_TRUE(r.ok()) << name << ": " << r.counterexample.value_or("") << " " << r.reason.value_or("");
    EXPECT_GT(r.tested, 0) << name;
  }
}

TEST(Verify, IndependentOfJobs) {
  for (const std::string name : {"sw-count", "invariants"}) {
    VerifyConfig one{name};
    one.n = 2;
    one.max_len = 5;
    one.max_size = 5;
    VerifyConfig many = one;
    many.jobs = 3;
    SuiteReport a = run_suite(one), b = run_suite(many);
    EXPECT_EQ(a.tested, b.tested);
    EXPECT_EQ(a.failed, b.failed);
    EXPECT_EQ(a.counterexample, b.counterexample);
  }
}
