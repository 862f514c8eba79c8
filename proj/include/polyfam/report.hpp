#pragma once

#include <string>

#include "json.hpp"

#include "polyfam/harness.hpp"

namespace polyfam {

// Key order is fixed so that equal reports serialize to identical bytes.
inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json cases = ordered_json::array();
    for (const auto& c : check.cases) {
      ordered_json params = ordered_json::object();
      for (const auto& [key, value] : c.params) params[key] = value;
      ordered_json mismatch = nullptr;
      if (c.outcome.mismatch) {
        const auto& mm = *c.outcome.mismatch;
        mismatch = ordered_json::object();
        mismatch["n"] = mm.n;
        mismatch["m"] = mm.m ? ordered_json(*mm.m) : ordered_json(nullptr);
        mismatch["lhs"] = mm.lhs;
        mismatch["rhs"] = mm.rhs;
        if (!mm.at.empty()) mismatch["at"] = mm.at;
      }
      cases.push_back({{"params", params},
                       {"outcome", c.outcome.pass ? "PASS" : "FAIL"},
                       {"first_mismatch", mismatch}});
    }
    checks.push_back({{"id", check.id}, {"variant", check.variant}, {"cases", cases}});
  }

  ordered_json adjudication = ordered_json::array();
  std::size_t groups_holding = 0;
  for (const auto& a : report.adjudication) {
    if (!a.passing_variants.empty()) ++groups_holding;
    adjudication.push_back({{"id", a.id},
                            {"variants", a.variants},
                            {"passing", a.passing_variants},
                            {"resolution", a.resolution},
                            {"grid_level", a.grid_level}});
  }

  ordered_json summary = ordered_json::object();
  summary["pass"] = report.case_passes();
  summary["fail"] = report.case_failures();
  summary["groups"] = report.adjudication.size();
  summary["groups_holding"] = groups_holding;
  summary["statement_failures"] = report.statement_failures();

  ordered_json out = ordered_json::object();
  out["engine"] = report.engine;
  out["order"] = report.order;
  out["seed"] = report.seed;
  out["checks"] = checks;
  out["summary"] = summary;
  out["adjudication"] = adjudication;
  return out;
}

inline std::string report_text(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace polyfam
