#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace asmlab;

namespace {

std::vector<std::string> summary(const std::vector<Report>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs)
    out.push_back(r.check + "/" + std::to_string(r.n) + "/" + (r.pass ? "pass" : "fail") + "/" +
                  (r.seed ? std::to_string(*r.seed) : "-"));
  return out;
}

}  // namespace

TEST(Suite, CoreToFivePasses) {
  auto reports = runSuite(Suite::core, 5, 42, false);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << ": " << r.witness.value_or("");
}

TEST(Suite, ConjectureToSevenPasses) {
  auto reports = runSuite(Suite::conjecture, 7, 0, false);
  int conj = 0;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << ": " << r.witness.value_or("");
    conj += r.check == "conjecture";
  }
  EXPECT_EQ(conj, 6);
}

TEST(Suite, SampledSuitesPassAndAreDeterministic) {
  for (Suite s : {Suite::ik, Suite::lascoux}) {
    auto a = runSuite(s, 4, 7, false);
    auto b = runSuite(s, 4, 7, false);
    EXPECT_EQ(summary(a), summary(b));
    for (const auto& r : a) {
      EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << ": " << r.witness.value_or("");
      EXPECT_TRUE(r.seed.has_value());
    }
  }
  EXPECT_NE(summary(runSuite(Suite::ik, 2, 1, false)), summary(runSuite(Suite::ik, 2, 2, false)));
}

TEST(Suite, CeilingAndNames) {
  EXPECT_THROW(runSuite(Suite::core, 99, 0, false), CeilingExceeded);
  EXPECT_THROW(runSuite(Suite::core, 9, 0, false), CeilingExceeded);
  EXPECT_THROW(runSuite(Suite::core, 0, 0, false), UnsupportedSize);
  EXPECT_THROW(parseSuite("everything"), UnknownName);
  EXPECT_EQ(parseSuite("all"), Suite::all);
}

TEST(Suite, ReportsSortedByCheckThenN) {
  auto reports = runSuite(Suite::corollaries, 3, 0, false);
  for (std::size_t k = 1; k < reports.size(); ++k) {
    const auto& a = reports[k - 1];
    const auto& b = reports[k];
    EXPECT_TRUE(a.check < b.check || (a.check == b.check && a.n < b.n));
  }
}
