#include <gtest/gtest.h>

#include "arcdeg/verify.hpp"

namespace arcdeg {
namespace {

TEST(VerifySweep, AllChecksPassUpToWeightSeven) {
  const auto report = verify_all(7);
  ASSERT_FALSE(report.checks.empty());
  for (const auto& c : report.checks) {
    EXPECT_GT(c.cases, 0) << c.name;
    EXPECT_TRUE(c.ok()) << c.name << ": " << c.failures << " failures, first " << c.first_failure;
  }
  EXPECT_TRUE(report.ok());
}

TEST(VerifySweep, ChecksAreStable) {
  const auto a = verify_all(4);
  const auto b = verify_all(4);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].cases, b.checks[i].cases);
  }
}

}  // namespace
}  // namespace arcdeg
