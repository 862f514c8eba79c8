#include <algorithm>

#include <gtest/gtest.h>

#include "polyfam/report.hpp"

using namespace polyfam;

namespace {

HarnessConfig small(std::vector<std::string> ids, std::size_t order = 4) {
  HarnessConfig cfg;
  cfg.order = order;
  cfg.ids = std::move(ids);
  return cfg;
}

const Adjudication& adjudication_of(const VerificationReport& r, const std::string& id) {
  for (const auto& a : r.adjudication)
    if (a.id == id) return a;
  throw std::runtime_error("no adjudication for " + id);
}

}  // namespace

TEST(Harness, CheckIds) {
  const auto ids = check_ids();
  EXPECT_GE(ids.size(), 12U);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  for (const char* id : {"thm2.2", "thm2.3", "thm2.4", "thm2.5", "thm3.1", "eq3.1", "thm4.2", "thm5.1", "cor5.2",
                         "eq1.12", "eq1.13", "eq1.14", "eq1.15", "eq2.3", "sec5.li-phi"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Harness, UnknownIdIsAUsageError) {
  try {
    (void)run_all(small({"nonexistent"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::usage);
  }
}

TEST(Harness, SelectedChecksHold) {
  const auto report = run_all(small({"thm5.1", "eq2.3", "sec5.li-phi", "cor5.2"}));
  EXPECT_EQ(report.adjudication.size(), 4U);
  EXPECT_TRUE(report.all_groups_hold());
  EXPECT_EQ(report.case_failures(), 0U);
  EXPECT_GT(report.case_passes(), 0U);
  ASSERT_NE(report.find("thm5.1", "statement"), nullptr);
  EXPECT_TRUE(report.find("thm5.1", "statement")->passed());
}

TEST(Harness, TypoVariantsAreAdjudicated) {
  const auto report = run_all(small({"thm4.2", "eq1.8-explicit", "thm2.3"}));
  EXPECT_EQ(adjudication_of(report, "thm4.2").resolution, "resolved:corrected");
  EXPECT_EQ(adjudication_of(report, "eq1.8-explicit").resolution, "resolved:corrected");
  EXPECT_EQ(adjudication_of(report, "thm2.3").resolution, "resolved:proof");
  const auto failures = report.statement_failures();
  EXPECT_NE(std::find(failures.begin(), failures.end(), "thm4.2"), failures.end());
  // a failing case records its first mismatch
  const auto* stated = report.find("thm4.2", "statement");
  ASSERT_NE(stated, nullptr);
  EXPECT_GT(stated->failures(), 0U);
  for (const auto& c : stated->cases)
    if (!c.outcome.pass) {
      ASSERT_TRUE(c.outcome.mismatch.has_value());
      EXPECT_NE(c.outcome.mismatch->lhs, c.outcome.mismatch->rhs);
      break;
    }
}

TEST(Harness, EscalationCeiling) {
  // at the base level both readings of thm2.4 agree; one enlargement separates them
  auto cfg = small({"thm2.4"});
  cfg.escalation_ceiling = 0;
  const auto tied = run_all(cfg);
  EXPECT_EQ(adjudication_of(tied, "thm2.4").resolution, "indistinguishable-at-scale");
  EXPECT_EQ(adjudication_of(tied, "thm2.4").grid_level, 0);
  cfg.escalation_ceiling = 1;
  const auto split = run_all(cfg);
  EXPECT_EQ(adjudication_of(split, "thm2.4").resolution, "resolved:statement");
  EXPECT_EQ(adjudication_of(split, "thm2.4").grid_level, 1);
}

TEST(Harness, DeterministicAndSchedulingIndependent) {
  auto cfg = small({"thm3.1", "eq3.1", "thm4.1a", "cor4.2", "trunc.thm5.1"});
  const std::string first = report_text(run_all(cfg));
  EXPECT_EQ(report_text(run_all(cfg)), first);
  cfg.jobs = 4;
  EXPECT_EQ(report_text(run_all(cfg)), first);
}

TEST(Harness, RandomParametersFollowTheSeed) {
  auto cfg = small({"eq1.12"});
  cfg.random_params = 2;
  cfg.seed = 17;
  const std::string a = report_text(run_all(cfg));
  EXPECT_EQ(report_text(run_all(cfg)), a);
  cfg.seed = 18;
  const auto other = run_all(cfg);
  EXPECT_NE(report_text(other), a);
  EXPECT_TRUE(other.all_groups_hold());
}

TEST(Harness, OrderZeroGrid) {
  const auto report = run_all(small({}, 0));
  EXPECT_EQ(report.order, 0U);
  EXPECT_EQ(report.adjudication.size(), check_ids().size());
  for (const auto& a : report.adjudication) EXPECT_FALSE(a.passing_variants.empty()) << a.id;
}

TEST(Report, Schema) {
  const auto report = run_all(small({"thm4.2", "eq2.3"}, 3));
  const auto j = to_json(report);
  EXPECT_EQ(j.at("engine"), kEngineVersion);
  EXPECT_EQ(j.at("order"), 3);
  ASSERT_TRUE(j.at("checks").is_array());
  EXPECT_EQ(j.at("summary").at("pass").get<std::size_t>(), report.case_passes());
  EXPECT_EQ(j.at("summary").at("fail").get<std::size_t>(), report.case_failures());
  bool saw_fail = false;
  for (const auto& check : j.at("checks")) {
    EXPECT_TRUE(check.at("id").is_string());
    EXPECT_TRUE(check.at("variant").is_string());
    for (const auto& c : check.at("cases")) {
      EXPECT_TRUE(c.at("params").is_object());
      const std::string outcome = c.at("outcome");
      ASSERT_TRUE(outcome == "PASS" || outcome == "FAIL");
      if (outcome == "PASS") {
        EXPECT_TRUE(c.at("first_mismatch").is_null());
      } else {
        saw_fail = true;
        const auto& mm = c.at("first_mismatch");
        EXPECT_TRUE(mm.at("n").is_number_integer());
        EXPECT_TRUE(mm.at("m").is_null() || mm.at("m").is_number_integer());
        EXPECT_NO_THROW(Rational::parse(mm.at("lhs").get<std::string>()));
        EXPECT_TRUE(mm.at("rhs").is_string());
      }
    }
  }
  EXPECT_TRUE(saw_fail);
  EXPECT_EQ(j.at("adjudication").size(), 2U);
}
