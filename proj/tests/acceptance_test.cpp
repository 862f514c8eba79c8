// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "polyfam/catalog.hpp"
#include "polyfam/identities.hpp"
#include "polyfam/report.hpp"

using namespace polyfam;

namespace {

using Clock = std::chrono::steady_clock;
using S = TruncSeries<Rational>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;
std::map<std::string, std::string> lines;  // printed in criterion order at the end

void verdict(const char* id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  lines[id] = std::string(ok ? "PASS " : "FAIL ") + id + ": " + detail;
  std::cerr << id << " done" << std::endl;
}

S random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  S s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(num(rng), den(rng));
  return s;
}

// AC1: binomial convolution, inverse and compose round trips, Bell numbers at N = 12.
void engine_soundness() {
  const auto start = Clock::now();
  const std::size_t n = 12;
  std::mt19937_64 rng(1);
  bool ok = true;
  std::string why;
  for (int trial = 0; trial < 10 && ok; ++trial) {
    const S f = random_series(rng, n), g = random_series(rng, n);
    const auto fg = egf_coeffs(f * g), fe = egf_coeffs(f), ge = egf_coeffs(g);
    for (std::size_t m = 0; m <= n && ok; ++m) {
      Rational acc;
      for (std::size_t k = 0; k <= m; ++k) acc += binomial(static_cast<long>(m), static_cast<long>(k)) * fe[k] * ge[m - k];
      if (fg[m] != acc) ok = false, why = "binomial convolution at n=" + std::to_string(m);
    }
    S unit = f;
    if (unit[0].is_zero()) unit[0] = Rational(1);
    if (ok && unit * inverse(unit) != S::one(n)) ok = false, why = "f * inverse(f) != 1";
    if (ok && inverse(inverse(unit)) != unit) ok = false, why = "inverse(inverse(f)) != f";
    S inner = g;
    inner[0] = Rational(0);
    S log1p(n);
    for (std::size_t k = 1; k <= n; ++k) log1p[k] = Rational((k % 2) ? 1 : -1, static_cast<long>(k));
    auto expm1 = exp_linear(Rational(1), n);
    expm1[0] = Rational(0);
    if (ok && compose(log1p, compose(expm1, inner)) != inner) ok = false, why = "log(1+(e^g-1)) != g";
  }
  auto expm1 = exp_linear(Rational(1), n);
  expm1[0] = Rational(0);
  const auto bell = egf_coeffs(compose(exp_linear(Rational(1), n), expm1));
  std::vector<Rational> expect{1};
  for (std::size_t m = 0; m < n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= m; ++k) acc += binomial(static_cast<long>(m), static_cast<long>(k)) * expect[k];
    expect.push_back(acc);
  }
  if (ok && bell != expect) ok = false, why = "Bell numbers";
  const double t = seconds_since(start);
  if (ok && t >= 1.0) ok = false, why = "too slow";
  std::ostringstream detail;
  detail << "engine checks at N=12 in " << t << " s" << (ok ? "" : " (" + why + ")");
  verdict("AC1", ok, detail.str());
}

// AC2: poly-Bernoulli at k = 1 and poly-Euler at k = 1 against independent recurrences.
void classical_anchors() {
  bool ok = true;
  std::string why;
  auto bern = classical_bernoulli_table(12);
  bern[1] = Rational(1, 2);
  const auto pb = poly_bernoulli(1, 12);
  for (std::size_t n = 0; n <= 12; ++n)
    if (pb[n] != bern[n]) ok = false, why = "B_" + std::to_string(n) + "^(1)";
  for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1)}) {
    const auto pe = poly_euler_poly<Rational>(1, x, 10);
    const auto e = classical_euler_poly_table<Rational>(10, x);
    for (std::size_t n = 1; n <= 10; ++n)
      if (pe[n] != Rational(static_cast<long>(n)) * e[n - 1])
        ok = false, why = "E_" + std::to_string(n) + "^(1)(" + x.to_string() + ")";
  }
  verdict("AC2", ok, ok ? "B_n^(1) for n <= 12 and E_n^(1)(x) for n <= 10, x in {0, 1/2, 1}" : why);
}

std::string passing_list(const Adjudication& a) {
  std::string s;
  for (const auto& v : a.passing_variants) s += (s.empty() ? "" : "|") + v;
  return s.empty() ? "none" : s;
}

// AC3: explicit formulas against generating functions.
void dual_routes() {
  HarnessConfig cfg;
  cfg.ids = {"eq1.4", "eq1.8-explicit", "eq1.8-recurrence", "thm4.2", "eq1.16", "thm5.1", "cor5.2"};
  const auto start = Clock::now();
  const auto report = run_all(cfg);
  const double t = seconds_since(start);
  bool ok = t < 60.0;
  std::ostringstream detail;
  for (const auto& a : report.adjudication) {
    if (a.passing_variants.empty()) ok = false;
    detail << a.id << "=" << passing_list(a) << " ";
  }
  detail << "in " << t << " s";
  verdict("AC3", ok, detail.str());
}

// AC4: identity groups, from the full report.
void identity_suites(const VerificationReport& report) {
  const std::vector<std::string> ids{"thm2.1", "thm2.2", "thm2.3", "thm2.4", "thm2.5", "eq1.12", "eq1.13", "eq1.14",
                                     "eq1.15", "thm4.1a", "thm4.1b", "thm4.1c", "thm4.1d", "thm4.3", "thm4.4", "thm4.5",
                                     "thm4.7", "cor4.1", "cor4.2", "eq2.3", "sec5.li-phi", "sec5.r1"};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& id : ids) {
    const Adjudication* found = nullptr;
    for (const auto& a : report.adjudication)
      if (a.id == id) found = &a;
    if (!found || found->passing_variants.empty()) {
      ok = false;
      detail << id << " has no passing variant; ";
    }
  }
  detail << ids.size() << " groups checked; statement-as-written failures:";
  for (const auto& id : report.statement_failures()) detail << " " << id;
  verdict("AC4", ok, detail.str());
}

// AC5: the symmetrized checks run reproducibly, plus the (0,0) coefficient by hand.
void symmetrized(const VerificationReport& full) {
  HarnessConfig cfg;
  cfg.ids = {"thm3.1", "eq3.1"};
  const auto a = run_all(cfg), b = run_all(cfg);
  bool ok = report_text(a) == report_text(b);
  std::ostringstream detail;
  std::size_t thm_cases = 0;
  for (const auto& check : a.checks) {
    if (check.id == "thm3.1") thm_cases = std::max(thm_cases, check.cases.size());
    detail << check.id << "/" << check.variant << " " << (check.cases.size() - check.failures()) << "/"
           << check.cases.size() << " PASS; ";
    // the same outcomes appear in the full report
    const auto* same = full.find(check.id, check.variant);
    if (!same || same->cases.size() != check.cases.size()) ok = false;
    else
      for (std::size_t i = 0; i < check.cases.size(); ++i)
        if (same->cases[i].outcome.pass != check.cases[i].outcome.pass) ok = false;
  }
  if (thm_cases != 2 * 2 * 4) ok = false;  // r in {2,3}, two triples, four (x, y)

  // D_0^(0) = 0 at r = 2 and the constant term of the closed form vanishes
  const ParamTriple p{Rational(1), Rational(0), Rational(1)};
  for (const auto& [x, y] : harness_detail::symmetrized_points()) {
    if (!symmetrized_Dcal(0, 0, 2, x, y, p).is_zero()) ok = false;
    if (!egf_coeff(symmetrized_gf(2, x, y, p, 5, 5), 0, 0).is_zero()) ok = false;
  }
  detail << "deterministic, (0,0) coefficient 0 on both sides";
  verdict("AC5", ok, detail.str());
}

// AC6: byte-identical reports, serial twice and parallel once.
VerificationReport determinism() {
  HarnessConfig cfg;
  const auto start = Clock::now();
  auto first = run_all(cfg);
  const std::string text = report_text(first);
  const std::string again = report_text(run_all(cfg));
  cfg.jobs = std::max(4U, std::thread::hardware_concurrency());
  const std::string parallel = report_text(run_all(cfg));
  const bool ok = text == again && text == parallel;
  std::ostringstream detail;
  detail << "verify --all report of " << text.size() << " bytes, serial x2 and " << cfg.jobs << " threads identical"
         << " (" << seconds_since(start) << " s total)";
  verdict("AC6", ok, ok ? detail.str() : "reports differ");
  return first;
}

// AC7: chain sums unchanged when the truncation bound grows by 2.
void truncation(const VerificationReport& report) {
  bool ok = true;
  std::size_t groups = 0, cases = 0;
  std::ostringstream detail;
  for (const auto& a : report.adjudication) {
    if (a.id.rfind("trunc.", 0) != 0) continue;
    ++groups;
    if (a.passing_variants.empty()) ok = false, detail << a.id << " fails; ";
  }
  for (const auto& c : report.checks)
    if (c.id.rfind("trunc.", 0) == 0) cases += c.cases.size();
  if (groups < 8) ok = false;
  detail << groups << " truncation groups, " << cases << " cases stable at bound + 2";
  verdict("AC7", ok, detail.str());
}

}  // namespace

int main() {
  try {
    engine_soundness();
    classical_anchors();
    dual_routes();
    const auto full = determinism();
    identity_suites(full);
    symmetrized(full);
    truncation(full);
  } catch (const std::exception& e) {
    for (const auto& [id, line] : lines) std::cout << line << '\n';
    std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  for (const auto& [id, line] : lines) std::cout << line << '\n';
  return failures == 0 ? 0 : 1;
}
