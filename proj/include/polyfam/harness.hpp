#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "polyfam/identities.hpp"

// Identity verification: each check group computes both sides of an identity
// over a parameter grid, once per variant reading of the identity, and records
// PASS or the first mismatching coefficient per grid case.
namespace polyfam {

inline constexpr const char* kEngineVersion = "polyfam 1.0.0";

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Mismatch {
  long n = 0;
  std::optional<long> m;
  std::string lhs;
  std::string rhs;
  std::string at;  // point of the case's sub-grid, empty when there is none
};

struct CaseOutcome {
  bool pass = true;
  std::optional<Mismatch> mismatch;
};

struct CaseResult {
  ParamList params;
  CaseOutcome outcome;
};

struct IdentityCheck {
  std::string id;
  std::string variant;
  std::vector<CaseResult> cases;

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.outcome.pass; }));
  }
  bool passed() const { return failures() == 0; }
};

struct Adjudication {
  std::string id;
  std::vector<std::string> variants;
  std::vector<std::string> passing_variants;
  std::string resolution;
  int grid_level = 0;  // highest escalation level that was run
};

struct VerificationReport {
  std::string engine = kEngineVersion;
  std::size_t order = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;
  std::vector<Adjudication> adjudication;

  std::size_t case_passes() const {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.cases.size() - c.failures();
    return total;
  }
  std::size_t case_failures() const {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.failures();
    return total;
  }
  // Every group has at least one variant passing on its whole grid.
  bool all_groups_hold() const {
    return std::all_of(adjudication.begin(), adjudication.end(),
                       [](const Adjudication& a) { return !a.passing_variants.empty(); });
  }
  // Ids whose as-printed reading fails somewhere.
  std::vector<std::string> statement_failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (c.variant == "statement" && !c.passed()) out.push_back(c.id);
    return out;
  }
  const IdentityCheck* find(const std::string& id, const std::string& variant) const {
    for (const auto& c : checks)
      if (c.id == id && c.variant == variant) return &c;
    return nullptr;
  }
};

struct HarnessConfig {
  std::size_t order = 8;          // n_max of the identity grids
  unsigned jobs = 1;              // worker threads; the report does not depend on it
  std::uint64_t seed = 0;         // drives the optional random parameter triples
  std::size_t random_params = 0;  // extra random (alpha, beta, gamma) triples
  int escalation_ceiling = 1;     // grid enlargements tried while variants tie
  std::vector<std::string> ids;   // groups to run; empty runs all
};

// Collects the first failure of a case, in evaluation order.
class OutcomeBuilder {
 public:
  void at(std::string where) { at_ = std::move(where); }
  bool failed() const { return outcome_.mismatch.has_value(); }

  void fail(long n, std::string lhs, std::string rhs, std::optional<long> m = std::nullopt) {
    if (failed()) return;
    outcome_.pass = false;
    outcome_.mismatch = Mismatch{n, m, std::move(lhs), std::move(rhs), at_};
  }

  void expect(long n, const Rational& lhs, const Rational& rhs, std::optional<long> m = std::nullopt) {
    if (failed() || lhs == rhs) return;
    fail(n, lhs.to_string(), rhs.to_string(), m);
  }

  void expect(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
    if (lhs.size() != rhs.size()) throw Error(ErrorKind::usage, "compared tables differ in length");
    for (std::size_t n = 0; n < lhs.size() && !failed(); ++n) expect(static_cast<long>(n), lhs[n], rhs[n]);
  }

  // Coefficient-wise; the differing power of x is appended to the location.
  void expect(long n, const Poly& lhs, const Poly& rhs) {
    if (failed() || lhs == rhs) return;
    const int top = std::max(lhs.degree(), rhs.degree());
    for (int j = 0; j <= top; ++j) {
      if (lhs.coeff(j) == rhs.coeff(j)) continue;
      const std::string saved = at_;
      at_ = at_.empty() ? "x^" + std::to_string(j) : at_ + ",x^" + std::to_string(j);
      fail(n, lhs.coeff(j).to_string(), rhs.coeff(j).to_string());
      at_ = saved;
      return;
    }
  }

  // rhs may stop early where its formula is undefined; the first missing row
  // is recorded as a failure with the reason.
  void expect_prefix(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs, const std::string& reason) {
    if (rhs.size() > lhs.size()) throw Error(ErrorKind::usage, "compared tables differ in length");
    for (std::size_t n = 0; n < rhs.size() && !failed(); ++n) expect(static_cast<long>(n), lhs[n], rhs[n]);
    if (rhs.size() < lhs.size())
      fail(static_cast<long>(rhs.size()), lhs[rhs.size()].to_string(), "undefined (" + reason + ")");
  }

  CaseOutcome result() const { return outcome_; }

 private:
  std::string at_;
  CaseOutcome outcome_;
};

namespace harness_detail {

struct CaseTask {
  ParamList params;
  std::function<std::vector<CaseOutcome>()> run;
};

struct Group {
  std::string id;
  std::vector<std::string> variants;
  int levels = 1;  // level 0 is the default grid, higher levels enlarge it
  std::function<std::vector<CaseTask>(int)> cases;
};

struct Grid {
  std::size_t order = 8;
  std::vector<MultiIndex> indices;          // depth 1..3
  std::vector<ParamTriple> params;          // (alpha, beta, gamma)
  std::vector<ParamTriple> params_unit_c;   // same (alpha, beta) with ln c = 1
  std::vector<Rational> points;             // x and y samples

  std::size_t at_least(std::size_t n) const { return order == 0 ? 0 : std::max(order, n); }
  std::size_t at_most(std::size_t n) const { return std::min(order, n); }
};

using GridPtr = std::shared_ptr<const Grid>;
using Outcomes = std::vector<CaseOutcome>;

inline std::string str(const Rational& q) { return q.to_string(); }

inline ParamList index_params(const MultiIndex& k, const ParamTriple& p) {
  return {{"k", k.to_string()}, {"alpha", str(p.alpha)}, {"beta", str(p.beta)}, {"gamma", str(p.gamma)}};
}

inline std::string point(const std::vector<std::pair<std::string, Rational>>& coords) {
  std::string s;
  for (const auto& [name, v] : coords) {
    if (!s.empty()) s += ',';
    s += name + "=" + v.to_string();
  }
  return s;
}

inline Grid make_grid(const HarnessConfig& cfg) {
  Grid g;
  g.order = cfg.order;
  const std::vector<int> entries{-2, -1, 0, 1, 2, 3};
  for (int a : entries) g.indices.push_back(MultiIndex{a});
  for (int a : entries)
    for (int b : entries) g.indices.push_back(MultiIndex{a, b});
  for (int a : entries)
    for (int b : entries)
      for (int c : entries) g.indices.push_back(MultiIndex{a, b, c});
  g.params = {{Rational(1), Rational(0), Rational(1)},
              {Rational(1), Rational(1), Rational(1)},
              {Rational(2), Rational(1), Rational(1, 2)}};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  while (g.params.size() < 3 + cfg.random_params) {
    ParamTriple p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (p.log_ab().is_zero()) continue;
    g.params.push_back(p);
  }
  for (const auto& p : g.params) {
    ParamTriple q{p.alpha, p.beta, Rational(1)};
    if (std::find(g.params_unit_c.begin(), g.params_unit_c.end(), q) == g.params_unit_c.end())
      g.params_unit_c.push_back(q);
  }
  g.points = {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  return g;
}

// One task per (index, parameter triple); fn returns one outcome per variant.
inline std::vector<CaseTask> index_param_cases(const GridPtr& g, std::size_t max_depth, bool unit_c,
                                               std::function<Outcomes(const MultiIndex&, const ParamTriple&)> fn) {
  std::vector<CaseTask> tasks;
  const auto& params = unit_c ? g->params_unit_c : g->params;
  for (const auto& k : g->indices) {
    if (k.depth() > max_depth) continue;
    for (const auto& p : params) tasks.push_back({index_params(k, p), [fn, k, p] { return fn(k, p); }});
  }
  return tasks;
}

// One task per index.
inline std::vector<CaseTask> index_cases(const GridPtr& g, std::size_t max_depth,
                                         std::function<Outcomes(const MultiIndex&)> fn) {
  std::vector<CaseTask> tasks;
  for (const auto& k : g->indices) {
    if (k.depth() > max_depth) continue;
    tasks.push_back({{{"k", k.to_string()}}, [fn, k] { return fn(k); }});
  }
  return tasks;
}

// Hurwitz parameters for the multiple Hurwitz-Lerch checks at depth r.
inline std::vector<Rational> hl_parameters(std::size_t r) {
  return {Rational(static_cast<long>(r)), Rational(1, 2), Rational(7, 3)};
}

inline std::vector<CaseTask> index_hurwitz_cases(const GridPtr& g,
                                                 std::function<Outcomes(const MultiIndex&, const Rational&)> fn) {
  std::vector<CaseTask> tasks;
  for (const auto& k : g->indices)
    for (const auto& a : hl_parameters(k.depth()))
      tasks.push_back({{{"k", k.to_string()}, {"a", str(a)}}, [fn, k, a] { return fn(k, a); }});
  return tasks;
}

inline const std::vector<Rational>& single_hurwitz_parameters() {
  static const std::vector<Rational> a{Rational(1), Rational(2), Rational(1, 2)};
  return a;
}

inline std::vector<CaseTask> depth_one_hurwitz_cases(std::function<Outcomes(int, const Rational&)> fn) {
  std::vector<CaseTask> tasks;
  for (int k = -2; k <= 3; ++k)
    for (const auto& a : single_hurwitz_parameters())
      tasks.push_back({{{"k", std::to_string(k)}, {"a", str(a)}}, [fn, k, a] { return fn(k, a); }});
  return tasks;
}

enum class KernelKind { euler, bernoulli };

// Memoized per thread, since many groups share the same kernels.
inline TruncSeries<Rational> family_kernel(KernelKind kind, const MultiIndex& k, const Rational& alpha,
                                           const Rational& beta, std::size_t order) {
  thread_local std::map<std::tuple<KernelKind, MultiIndex, Rational, Rational, std::size_t>, TruncSeries<Rational>> memo;
  const auto key = std::make_tuple(kind, k, alpha, beta, order);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto kernel =
      kind == KernelKind::euler ? euler_kernel(k, alpha, beta, order) : bernoulli_kernel(k, alpha, beta, order);
  memo.emplace(key, kernel);
  return kernel;
}

inline Rational depth_of(const MultiIndex& k) { return Rational(static_cast<long>(k.depth())); }

// ---------------------------------------------------------------------------
// Expansions in Stirling numbers, higher-order Bernoulli and Frobenius-Euler
// polynomials, for either kernel.

inline Group stirling_shift_group(const GridPtr& g, KernelKind kind, std::string id, std::string fixed_variant) {
  Group grp{std::move(id), {"statement", fixed_variant}, 1, {}};
  grp.cases = [g, kind](int) {
    return index_param_cases(g, 3, false, [g, kind](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      Outcomes out;
      for (const Rational& shift : {p.gamma, rg}) {
        const auto tables = shifted_tables(kernel, shift, n);
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          b.expect(shifted_values(kernel, rg * x), stirling_expansion_rhs(tables, n, rg, x, false));
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline Group stirling_zero_group(const GridPtr& g, KernelKind kind, std::string id, std::string fixed_variant) {
  Group grp{std::move(id), {"statement", fixed_variant}, 1, {}};
  grp.cases = [g, kind](int) {
    return index_param_cases(g, 3, false, [g, kind](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      const auto tables = shifted_tables(kernel, Rational(0), n);
      Outcomes out;
      for (bool falling : {false, true}) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          b.expect(shifted_values(kernel, rg * x), stirling_expansion_rhs(tables, n, rg, x, falling));
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline const std::vector<long>& mix_orders() {
  static const std::vector<long> s{1, 2};
  return s;
}

inline const std::vector<Rational>& frobenius_parameters() {
  static const std::vector<Rational> lam{Rational(2), Rational(1, 2), Rational(-1)};
  return lam;
}

// x-free parts of the higher-order Bernoulli and Frobenius-Euler series, shared
// across sample points: the value at x0 is base * e^{x0 t}.
struct MixBases {
  std::map<long, TruncSeries<Rational>> bernoulli;
  std::map<std::pair<long, Rational>, TruncSeries<Rational>> frobenius;

  MixBases(const std::vector<long>& orders, std::size_t n) {
    for (long s : orders) {
      bernoulli.emplace(s, bernoulli_higher_series(s, Rational(0), n));
      for (const auto& lam : frobenius_parameters())
        frobenius.emplace(std::make_pair(s, lam), frobenius_euler_series(s, Rational(0), lam, n));
    }
  }
  std::vector<Rational> bernoulli_at(long s, const Rational& x0) const {
    const auto& b = bernoulli.at(s);
    return egf_coeffs(b * exp_linear(x0, b.order()));
  }
  std::vector<Rational> frobenius_at(long s, const Rational& lam, const Rational& x0) const {
    const auto& h = frobenius.at({s, lam});
    return egf_coeffs(h * exp_linear(x0, h.order()));
  }
};

// Variants: the printed denominator C(l+s, l), and (when with_factorial_lower)
// the form C(l+s, s!) that appears in the derivation. Level 1 adds s = 3,
// the first order at which the two differ.
inline Group bernoulli_mix_group(const GridPtr& g, KernelKind kind, std::string id, bool with_factorial_lower) {
  Group grp{std::move(id), {"statement"}, 1, {}};
  if (with_factorial_lower) {
    grp.variants.push_back("proof");
    grp.levels = 2;
  }
  const std::size_t nvariants = grp.variants.size();
  grp.cases = [g, kind, nvariants](int level) {
    const std::vector<long> orders = level == 0 ? std::vector<long>{1, 2} : std::vector<long>{3};
    auto bases = std::make_shared<const MixBases>(orders, g->order);
    auto tasks = index_param_cases(g, 3, false, [g, kind, orders, nvariants, bases](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      const auto f0 = shifted_values(kernel, Rational(0));
      std::vector<OutcomeBuilder> builders(nvariants);
      for (long s : orders)
        for (const auto& x : g->points) {
          const auto lhs = shifted_values(kernel, rg * x);
          const auto bs = bases->bernoulli_at(s, rg * x);
          for (std::size_t v = 0; v < nvariants; ++v) {
            auto& b = builders[v];
            b.at(point({{"s", Rational(s)}, {"x", x}}));
            b.expect_prefix(lhs, bernoulli_expansion_rhs(f0, s, bs, v == 1), "binomial denominator vanishes");
          }
        }
      Outcomes out;
      for (const auto& b : builders) out.push_back(b.result());
      return out;
    });
    if (level > 0)
      for (auto& t : tasks) t.params.push_back({"s", "3"});
    return tasks;
  };
  return grp;
}

inline Group frobenius_mix_group(const GridPtr& g, KernelKind kind, std::string id) {
  Group grp{std::move(id), {"statement"}, 1, {}};
  grp.cases = [g, kind](int) {
    auto bases = std::make_shared<const MixBases>(mix_orders(), g->order);
    return index_param_cases(g, 3, false, [g, kind, bases](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      const auto tables = shifted_tables(kernel, Rational(-1), 2);  // F(0), F(1), F(2)
      OutcomeBuilder b;
      for (long s : mix_orders())
        for (const auto& lam : frobenius_parameters())
          for (const auto& x : g->points) {
            b.at(point({{"s", Rational(s)}, {"lambda", lam}, {"x", x}}));
            b.expect(shifted_values(kernel, rg * x), frobenius_expansion_rhs(tables, s, lam, bases->frobenius_at(s, lam, rg * x)));
          }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// The depth-one, ln c = 1 block: four expansions of the poly-Euler polynomials
// with two parameters.
inline Group poly_euler_block_group(const GridPtr& g) {
  Group grp{"thm2.1", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    auto bases = std::make_shared<const MixBases>(mix_orders(), g->order);
    return index_param_cases(g, 1, true, [g, bases](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(KernelKind::euler, k, p.alpha, p.beta, n);
      const auto shifted = shifted_tables(kernel, Rational(1), n);
      const auto at_zero = shifted_tables(kernel, Rational(0), n);
      const auto positive = shifted_tables(kernel, Rational(-1), 2);
      const auto f0 = shifted_values(kernel, Rational(0));
      OutcomeBuilder b;
      for (const auto& x : g->points) {
        const auto lhs = shifted_values(kernel, x);
        b.at(point({{"part", Rational(1)}, {"x", x}}));
        b.expect(lhs, stirling_expansion_rhs(shifted, n, Rational(1), x, false));
        b.at(point({{"part", Rational(2)}, {"x", x}}));
        b.expect(lhs, stirling_expansion_rhs(at_zero, n, Rational(1), x, true));
        for (long s : mix_orders()) {
          b.at(point({{"part", Rational(3)}, {"s", Rational(s)}, {"x", x}}));
          const auto bs = bases->bernoulli_at(s, x);
          b.expect_prefix(lhs, bernoulli_expansion_rhs(f0, s, bs, false), "binomial denominator vanishes");
          for (const auto& lam : frobenius_parameters()) {
            b.at(point({{"part", Rational(4)}, {"s", Rational(s)}, {"lambda", lam}, {"x", x}}));
            b.expect(lhs, frobenius_expansion_rhs(positive, s, lam, bases->frobenius_at(s, lam, x)));
          }
        }
      }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// ---------------------------------------------------------------------------
// Polynomial-in-x properties.

// F_n(x) = sum_i C(n,i) (step)^{n-i} F_i(0) x^{n-i}; one variant per step.
inline Group polynomial_form_group(const GridPtr& g, KernelKind kind, std::string id,
                                   std::vector<std::string> variants, std::vector<bool> scale_by_depth) {
  Group grp{std::move(id), std::move(variants), 1, {}};
  grp.cases = [g, kind, scale_by_depth](int) {
    return index_param_cases(g, 3, false, [g, kind, scale_by_depth](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      const auto f0 = shifted_values(kernel, Rational(0));
      Outcomes out;
      for (bool scaled : scale_by_depth) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          b.expect(shifted_values(kernel, rg * x), binomial_shift_rhs(f0, scaled ? rg : p.gamma, x));
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

// F_n(x; a,b,c) = lambda^n Fhat_n(X) where Fhat is the family at the reduced
// parameters and X is one of the candidate reduced arguments.
inline Group reduction_group(const GridPtr& g, KernelKind kind, std::string id) {
  Group grp{std::move(id), {"statement", "corrected"}, 1, {}};
  grp.cases = [g, kind](int) {
    return index_param_cases(g, 3, false, [g, kind](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational r = depth_of(k);
      const Rational lam = p.log_ab();
      // Euler: a = 1, b = c = e; Bernoulli: a = c = e, b = 1.
      const auto reduced = kind == KernelKind::euler ? family_kernel(kind, k, Rational(0), Rational(1), n)
                                                     : family_kernel(kind, k, Rational(1), Rational(0), n);

      Outcomes out;
      for (bool corrected : {false, true}) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          Rational arg;
          if (kind == KernelKind::euler)
            arg = ((corrected ? Rational(1) : r) * x * p.gamma + p.alpha) / lam;
          else
            arg = (x * p.gamma - (corrected ? Rational(1) : r) * p.beta) / lam;
          const auto lhs = shifted_values(kernel, r * p.gamma * x);
          auto rhs = shifted_values(reduced, r * arg);
          for (std::size_t i = 0; i <= n; ++i) rhs[i] *= pow(lam, static_cast<long>(i));
          b.expect(lhs, rhs);
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

// d/dx F_{n+1}(x) = (n+1) factor F_n(x) with symbolic x; one variant per factor.
inline Group derivative_group(const GridPtr& g, KernelKind kind, std::string id, std::vector<std::string> variants,
                              std::vector<bool> scale_by_depth, bool unit_c) {
  Group grp{std::move(id), std::move(variants), 1, {}};
  grp.cases = [g, kind, scale_by_depth, unit_c](int) {
    return index_param_cases(g, 3, unit_c, [g, kind, scale_by_depth](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n + 1);
      const Rational rg = depth_of(k) * p.gamma;
      const auto values = egf_coeffs(promote<Poly>(kernel) * exp_linear<Poly>(Poly::x() * rg, n + 1));
      Outcomes out;
      for (bool scaled : scale_by_depth) {
        const Rational factor = scaled ? rg : p.gamma;
        OutcomeBuilder b;
        for (std::size_t i = 0; i <= n; ++i)
          b.expect(static_cast<long>(i), values[i + 1].derivative(),
                   values[i] * (Rational(static_cast<long>(i + 1)) * factor));
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

// F_n(x+y) = sum_i C(n,i) step^{n-i} F_i(x) y^{n-i}; one variant per step.
inline Group addition_group(const GridPtr& g, KernelKind kind, std::string id, std::vector<std::string> variants,
                            std::vector<bool> scale_by_depth, bool unit_c) {
  Group grp{std::move(id), std::move(variants), 1, {}};
  grp.cases = [g, kind, scale_by_depth, unit_c](int) {
    return index_param_cases(g, 3, unit_c, [g, kind, scale_by_depth](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(kind, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      Outcomes out;
      for (bool scaled : scale_by_depth) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          const auto fx = shifted_values(kernel, rg * x);
          for (const auto& y : g->points) {
            b.at(point({{"x", x}, {"y", y}}));
            b.expect(shifted_values(kernel, rg * (x + y)), binomial_shift_rhs(fx, scaled ? rg : p.gamma, y));
          }
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

// ---------------------------------------------------------------------------
// Generating function against explicit sums.

inline Group hurwitz_explicit_group(const GridPtr& g) {
  Group grp{"eq1.4", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return depth_one_hurwitz_cases([g](int k, const Rational& a) {
      const std::size_t n = g->at_least(10);
      const auto values = hurwitz_poly_bernoulli(k, a, n);
      OutcomeBuilder b;
      for (std::size_t i = 0; i <= n; ++i) b.expect(static_cast<long>(i), values[i], hurwitz_pb_explicit(static_cast<long>(i), k, a));
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group imatomi_explicit_group(const GridPtr& g) {
  Group grp{"eq1.8-explicit", {"statement", "corrected"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const std::size_t n = g->order;
      const auto values = imatomi_mpb(k, n);
      Outcomes out;
      for (auto pairing : {ChainPairing::largest_first, ChainPairing::largest_last}) {
        OutcomeBuilder b;
        b.expect(values, imatomi_explicit_table(n, k, pairing));
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline Group imatomi_recurrence_group(const GridPtr& g) {
  Group grp{"eq1.8-recurrence", {"statement", "corrected"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      Outcomes out;
      for (bool lower_first : {true, false}) {
        const auto rec = imatomi_recurrence_check(k, g->order, lower_first);
        OutcomeBuilder b;
        if (!rec.pass) b.fail(static_cast<long>(rec.first_mismatch), rec.lhs.to_string(), rec.rhs.to_string());
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline Group euler_explicit_group(const GridPtr& g) {
  Group grp{"eq1.16", {"statement", "euler-summed"}, 1, {}};
  grp.cases = [g](int) {
    return index_param_cases(g, 2, false, [g](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->at_most(6);
      const auto kernel = family_kernel(KernelKind::euler, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      Outcomes out;
      for (auto reading : {CompositionReading::literal_parts, CompositionReading::euler_summed}) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          b.expect(shifted_values(kernel, rg * x), multi_poly_euler_explicit_table(n, k, x, p, reading));
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline Group bernoulli_explicit_group(const GridPtr& g) {
  Group grp{"thm4.2", {"statement", "proof", "corrected"}, 1, {}};
  grp.cases = [g](int) {
    return index_param_cases(g, 3, false, [g](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto kernel = family_kernel(KernelKind::bernoulli, k, p.alpha, p.beta, n);
      const Rational rg = depth_of(k) * p.gamma;
      Outcomes out;
      for (auto reading : {ExponentReading::as_stated, ExponentReading::with_ln_c, ExponentReading::corrected}) {
        OutcomeBuilder b;
        for (const auto& x : g->points) {
          b.at(point({{"x", x}}));
          b.expect(shifted_values(kernel, rg * x), mpb_explicit_table(n, k, x, p, reading));
        }
        out.push_back(b.result());
      }
      return out;
    });
  };
  return grp;
}

inline Group hl_polynomial_explicit_group(const GridPtr& g) {
  Group grp{"thm5.1", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return index_hurwitz_cases(g, [g](const MultiIndex& k, const Rational& a) {
      const std::size_t n = g->order;
      OutcomeBuilder b;
      for (const auto& x : g->points) {
        b.at(point({{"x", x}}));
        b.expect(hl_multi_pb_poly<Rational>(k, a, x, n), hl_mpb_explicit_table<Rational>(n, k, a, x));
      }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group hl_numbers_explicit_group(const GridPtr& g) {
  Group grp{"cor5.2", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return index_hurwitz_cases(g, [g](const MultiIndex& k, const Rational& a) {
      const std::size_t n = g->order;
      OutcomeBuilder b;
      b.expect(hl_multi_pb(k, a, n), hl_mpb_numbers_explicit_table(n, k, a));
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group hl_depth_one_group(const GridPtr& g) {
  Group grp{"sec5.r1", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return depth_one_hurwitz_cases([g](int k, const Rational& a) {
      const std::size_t n = g->order;
      const auto values = hl_mpb_numbers_explicit_table(n, MultiIndex{k}, a);
      OutcomeBuilder b;
      for (std::size_t i = 0; i <= n; ++i)
        b.expect(static_cast<long>(i), values[i], hurwitz_pb_explicit(static_cast<long>(i), k, a));
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group li_phi_group(const GridPtr& g) {
  Group grp{"sec5.li-phi", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const std::size_t n = std::max(g->at_least(15), k.depth());
      const std::size_t r = k.depth();
      const auto lhs = shift_div_t(multi_polylog_z(k, n), r);
      const auto rhs = hl_multi_phi(k, Rational(static_cast<long>(r)), n - r);
      OutcomeBuilder b;
      for (std::size_t i = 0; i + r <= n; ++i) b.expect(static_cast<long>(i), lhs[i], rhs[i]);
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group polylog_derivative_group(const GridPtr& g) {
  Group grp{"eq2.3", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const auto res = polylog_derivative_check(k, g->at_least(12));
      OutcomeBuilder b;
      if (!res.pass) b.fail(static_cast<long>(res.first_mismatch), res.lhs.to_string(), res.rhs.to_string());
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// ---------------------------------------------------------------------------
// Double generating functions of the symmetrized constructions.

inline const std::vector<std::pair<Rational, Rational>>& symmetrized_points() {
  static const std::vector<std::pair<Rational, Rational>> pts{
      {Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1, 2), Rational(-1)}, {Rational(-1), Rational(1, 2)}};
  return pts;
}

inline void expect_bivariate(OutcomeBuilder& b, const std::vector<std::vector<Rational>>& lhs,
                             const BiTruncSeries<Rational>& rhs) {
  for (std::size_t i = 0; i <= rhs.order_t() && !b.failed(); ++i)
    for (std::size_t j = 0; j <= rhs.order_u() && !b.failed(); ++j)
      b.expect(static_cast<long>(i), lhs[i][j], egf_coeff(rhs, i, j), static_cast<long>(j));
}

inline Group symmetrized_group(const GridPtr& g) {
  Group grp{"thm3.1", {"literal", "reduced"}, 1, {}};
  grp.cases = [g](int) {
    std::vector<CaseTask> tasks;
    const std::vector<ParamTriple> params{{Rational(1), Rational(0), Rational(1)},
                                          {Rational(2), Rational(1), Rational(1, 2)}};
    for (std::size_t r : {2U, 3U})
      for (const auto& p : params)
        for (const auto& [x, y] : symmetrized_points()) {
          ParamList pl{{"r", std::to_string(r)}, {"alpha", str(p.alpha)}, {"beta", str(p.beta)},
                       {"gamma", str(p.gamma)}, {"x", str(x)}, {"y", str(y)}};
          tasks.push_back({pl, [g, r, p, x = x, y = y] {
                             const std::size_t n = g->at_most(5);
                             const auto rhs = symmetrized_gf(r, x, y, p, n, n);
                             Outcomes out;
                             for (auto conv : {SymmetrizationConvention::literal, SymmetrizationConvention::reduced}) {
                               OutcomeBuilder b;
                               expect_bivariate(b, symmetrized_Dcal_table(r, n, n, x, y, p, conv), rhs);
                               out.push_back(b.result());
                             }
                             return out;
                           }});
        }
    return tasks;
  };
  return grp;
}

inline Group symmetrized_depth_one_group(const GridPtr& g) {
  Group grp{"eq3.1", {"statement"}, 1, {}};
  grp.cases = [g](int) {
    std::vector<CaseTask> tasks;
    for (const auto& p : g->params)
      for (const auto& [x, y] : symmetrized_points()) {
        ParamList pl{{"alpha", str(p.alpha)}, {"beta", str(p.beta)}, {"gamma", str(p.gamma)},
                     {"x", str(x)},           {"y", str(y)}};
        tasks.push_back({pl, [g, p, x = x, y = y] {
                           const std::size_t n = g->at_most(5);
                           OutcomeBuilder b;
                           expect_bivariate(b, symmetrized_D_table(n, n, x, y, p), symmetrized_gf(1, x, y, p, n, n));
                           return Outcomes{b.result()};
                         }});
      }
    return tasks;
  };
  return grp;
}

// ---------------------------------------------------------------------------
// Classical anchors and specializations.

inline Group kaneko_anchor_group(const GridPtr& g) {
  Group grp{"anchor.kaneko-bernoulli", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return std::vector<CaseTask>{{{{"k", "1"}}, [g] {
      const std::size_t n = g->at_least(12);
      const auto values = poly_bernoulli(1, n);
      const auto classical = classical_bernoulli_table(n);
      OutcomeBuilder b;
      for (std::size_t i = 0; i <= n; ++i)  // the generating function has B_1 = +1/2
        b.expect(static_cast<long>(i), values[i], sign_power(static_cast<long>(i)) * classical[i]);
      return Outcomes{b.result()};
    }}};
  };
  return grp;
}

inline Group poly_euler_anchor_group(const GridPtr& g) {
  Group grp{"anchor.poly-euler-k1", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return std::vector<CaseTask>{{{{"k", "1"}}, [g] {
      const std::size_t n = g->at_least(10);
      OutcomeBuilder b;
      for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1)}) {
        b.at(point({{"x", x}}));
        const auto values = poly_euler_poly<Rational>(1, x, n);
        const auto classical = classical_euler_poly_table(n, x);
        b.expect(0, values[0], Rational(0));
        for (std::size_t i = 1; i <= n; ++i)
          b.expect(static_cast<long>(i), values[i], Rational(static_cast<long>(i)) * classical[i - 1]);
      }
      return Outcomes{b.result()};
    }}};
  };
  return grp;
}

inline Group ohno_sasaki_anchor_group(const GridPtr& g) {
  Group grp{"anchor.ohno-sasaki-euler", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return std::vector<CaseTask>{{{{"k", "1"}}, [g] {
      const std::size_t n = g->at_least(10);
      const auto values = ohno_sasaki_poly_euler(1, n);
      const auto half = classical_euler_poly_table(n, Rational(1, 2));
      OutcomeBuilder b;
      for (std::size_t i = 0; i <= n; ++i)  // Euler numbers 2^n E_n(1/2)
        b.expect(static_cast<long>(i), values[i], pow(Rational(2), static_cast<long>(i)) * half[i]);
      return Outcomes{b.result()};
    }}};
  };
  return grp;
}

inline Group poly_euler_lattice_group(const GridPtr& g) {
  Group grp{"lattice.poly-euler", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    std::vector<CaseTask> tasks;
    for (int k = -2; k <= 3; ++k)
      tasks.push_back({{{"k", std::to_string(k)}}, [g, k] {
                         const std::size_t n = g->at_least(10);
                         OutcomeBuilder b;
                         for (const auto& x : g->points) {
                           const auto direct = poly_euler_poly<Rational>(k, x, n);
                           b.at(point({{"alpha", Rational(0)}, {"beta", Rational(1)}, {"x", x}}));
                           b.expect(multi_poly_euler<Rational>(MultiIndex{k}, x, {Rational(0), Rational(1), Rational(1)}, n), direct);
                           // a = c = e, b = 1 shifts the argument by one
                           b.at(point({{"alpha", Rational(1)}, {"beta", Rational(0)}, {"x", x}}));
                           b.expect(multi_poly_euler<Rational>(MultiIndex{k}, x - Rational(1), {Rational(1), Rational(0), Rational(1)}, n),
                                    direct);
                         }
                         return Outcomes{b.result()};
                       }});
    return tasks;
  };
  return grp;
}

// a = c = e, b = 1 against Li(1-e^{-t}) e^{rxt} / (1-e^{-t})^r built directly.
inline Group bernoulli_lattice_group(const GridPtr& g) {
  Group grp{"lattice.multi-poly-bernoulli", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const std::size_t n = g->at_least(10);
      const std::size_t r = k.depth();
      const auto num = multi_polylog_t(k, Rational(1), n + r);
      const auto den = pow(one_minus_exp_neg(Rational(1), n + r), r);
      const auto direct = shift_div_t(num, r) * inverse(shift_div_t(den, r));
      OutcomeBuilder b;
      for (const auto& x : g->points) {
        b.at(point({{"x", x}}));
        b.expect(multi_poly_bernoulli<Rational>(k, x, {Rational(1), Rational(0), Rational(1)}, n),
                 egf_coeffs(direct * exp_linear(depth_of(k) * x, n)));
      }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

inline Group hurwitz_lattice_group(const GridPtr& g) {
  Group grp{"lattice.hurwitz", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return depth_one_hurwitz_cases([g](int k, const Rational& a) {
      const std::size_t n = g->at_least(10);
      const auto hurwitz = hurwitz_poly_bernoulli(k, a, n);
      OutcomeBuilder b;
      b.at("depth-one multiple form");
      b.expect(hl_multi_pb(MultiIndex{k}, a, n), hurwitz);
      if (a == Rational(1)) {
        b.at("a=1 against Kaneko");
        b.expect(hurwitz, poly_bernoulli(k, n));
        b.at("depth-one Imatomi");
        b.expect(imatomi_mpb(MultiIndex{k}, n), hurwitz);
      }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// Phi_k(1-e^{-t}, r) = Li_k(1-e^{-t}) / (1-e^{-t})^r
inline Group hl_lattice_group(const GridPtr& g) {
  Group grp{"lattice.hl-at-depth", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const std::size_t n = g->at_least(10);
      OutcomeBuilder b;
      b.expect(hl_multi_pb(k, depth_of(k), n),
               multi_poly_bernoulli<Rational>(k, Rational(0), {Rational(1), Rational(0), Rational(1)}, n));
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// Symbolic x evaluated at a point equals computing at that point.
inline Group symbolic_lattice_group(const GridPtr& g) {
  Group grp{"lattice.symbolic-x", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return index_param_cases(g, 3, false, [g](const MultiIndex& k, const ParamTriple& p) {
      const std::size_t n = g->order;
      const auto euler = multi_poly_euler<Poly>(k, Poly::x(), p, n);
      const auto bern = multi_poly_bernoulli<Poly>(k, Poly::x(), p, n);
      OutcomeBuilder b;
      for (const auto& x : g->points) {
        const auto euler_x = multi_poly_euler<Rational>(k, x, p, n);
        const auto bern_x = multi_poly_bernoulli<Rational>(k, x, p, n);
        for (std::size_t i = 0; i <= n; ++i) {
          b.at(point({{"x", x}}) + ",family=multi-poly-euler");
          b.expect(static_cast<long>(i), euler[i].eval(x), euler_x[i]);
          b.at(point({{"x", x}}) + ",family=multi-poly-bernoulli");
          b.expect(static_cast<long>(i), bern[i].eval(x), bern_x[i]);
        }
      }
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// Both routes of the Hurwitz-Lerch polynomials with x kept symbolic.
inline Group symbolic_hl_lattice_group(const GridPtr& g) {
  Group grp{"lattice.symbolic-x-hl", {"n/a"}, 1, {}};
  grp.cases = [g](int) {
    return index_cases(g, 3, [g](const MultiIndex& k) {
      const std::size_t n = g->order;
      const auto hl = hl_multi_pb_poly<Poly>(k, Rational(1, 2), Poly::x(), n);
      const auto hl_explicit = hl_mpb_explicit_table<Poly>(n, k, Rational(1, 2), Poly::x());
      OutcomeBuilder b;
      b.at("a=1/2");
      for (std::size_t i = 0; i <= n; ++i) b.expect(static_cast<long>(i), hl[i], hl_explicit[i]);
      return Outcomes{b.result()};
    });
  };
  return grp;
}

// ---------------------------------------------------------------------------
// Truncation stability: extending every chain or m-sum bound by 2 changes nothing.

inline Group truncation_group(const GridPtr& g, std::string id,
                              std::function<void(OutcomeBuilder&, const MultiIndex&, const ParamTriple&)> body,
                              std::size_t max_depth, bool with_params) {
  Group grp{"trunc." + std::move(id), {"n/a"}, 1, {}};
  grp.cases = [g, body, max_depth, with_params](int) {
    auto run = [body](const MultiIndex& k, const ParamTriple& p) {
      OutcomeBuilder b;
      body(b, k, p);
      return Outcomes{b.result()};
    };
    if (with_params) return index_param_cases(g, max_depth, false, run);
    return index_cases(g, max_depth, [run](const MultiIndex& k) { return run(k, ParamTriple{}); });
  };
  return grp;
}

inline std::vector<Group> truncation_groups(const GridPtr& g) {
  std::vector<Group> out;
  out.push_back(truncation_group(
      g, "eq1.4",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple&) {
        const std::size_t n = g->at_least(10);
        for (const auto& a : single_hurwitz_parameters()) {
          b.at(point({{"a", a}}));
          for (std::size_t i = 0; i <= n; ++i)
            b.expect(static_cast<long>(i), hurwitz_pb_explicit(static_cast<long>(i), k[0], a),
                     hurwitz_pb_explicit(static_cast<long>(i), k[0], a, 2));
        }
      },
      1, false));
  out.push_back(truncation_group(
      g, "eq1.8",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple&) {
        for (auto pairing : {ChainPairing::largest_first, ChainPairing::largest_last}) {
          b.at(pairing == ChainPairing::largest_first ? "variant=statement" : "variant=corrected");
          b.expect(imatomi_explicit_table(g->order, k, pairing), imatomi_explicit_table(g->order, k, pairing, 2));
        }
      },
      3, false));
  out.push_back(truncation_group(
      g, "eq1.16",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple& p) {
        const std::size_t n = g->at_most(6);
        for (auto reading : {CompositionReading::literal_parts, CompositionReading::euler_summed})
          for (const auto& x : g->points) {
            b.at(point({{"x", x}}) + (reading == CompositionReading::literal_parts ? ",variant=statement"
                                                                                   : ",variant=euler-summed"));
            b.expect(multi_poly_euler_explicit_table(n, k, x, p, reading),
                     multi_poly_euler_explicit_table(n, k, x, p, reading, 2));
          }
      },
      2, true));
  out.push_back(truncation_group(
      g, "thm4.2",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple& p) {
        const char* names[] = {"statement", "proof", "corrected"};
        int v = 0;
        for (auto reading : {ExponentReading::as_stated, ExponentReading::with_ln_c, ExponentReading::corrected}) {
          for (const auto& x : g->points) {
            b.at(point({{"x", x}}) + ",variant=" + names[v]);
            b.expect(mpb_explicit_table(g->order, k, x, p, reading), mpb_explicit_table(g->order, k, x, p, reading, 2));
          }
          ++v;
        }
      },
      3, true));
  out.push_back(truncation_group(
      g, "thm5.1",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple&) {
        for (const auto& a : hl_parameters(k.depth()))
          for (const auto& x : g->points) {
            b.at(point({{"a", a}, {"x", x}}));
            b.expect(hl_mpb_explicit_table<Rational>(g->order, k, a, x),
                     hl_mpb_explicit_table<Rational>(g->order, k, a, x, 2));
          }
      },
      3, false));
  out.push_back(truncation_group(
      g, "cor5.2",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple&) {
        for (const auto& a : hl_parameters(k.depth())) {
          b.at(point({{"a", a}}));
          b.expect(hl_mpb_numbers_explicit_table(g->order, k, a), hl_mpb_numbers_explicit_table(g->order, k, a, 2));
        }
      },
      3, false));
  out.push_back(truncation_group(
      g, "thm2.2",
      [g](OutcomeBuilder& b, const MultiIndex& k, const ParamTriple& p) {
        const std::size_t n = g->order;
        const auto kernel = family_kernel(KernelKind::euler, k, p.alpha, p.beta, n);
        const Rational rg = depth_of(k) * p.gamma;
        const auto tables = shifted_tables(kernel, rg, n + 2);
        for (bool falling : {false, true})
          for (const auto& x : g->points) {
            b.at(point({{"x", x}}) + (falling ? ",factorial=falling" : ",factorial=rising"));
            b.expect(stirling_expansion_rhs(tables, n, rg, x, falling),
                     stirling_expansion_rhs(tables, n, rg, x, falling, 2));
          }
      },
      3, true));
  out.push_back(truncation_group(
      g, "thm2.4",
      [g, bases = std::make_shared<const MixBases>(mix_orders(), g->order)](OutcomeBuilder& b, const MultiIndex& k,
                                                                              const ParamTriple& p) {
        const std::size_t n = g->order;
        const auto kernel = family_kernel(KernelKind::euler, k, p.alpha, p.beta, n);
        const Rational rg = depth_of(k) * p.gamma;
        const auto f0 = shifted_values(kernel, Rational(0));
        for (long s : mix_orders())
          for (const auto& x : g->points) {
            b.at(point({{"s", Rational(s)}, {"x", x}}));
            const auto bs = bases->bernoulli_at(s, rg * x);
            b.expect(bernoulli_expansion_rhs(f0, s, bs, false), bernoulli_expansion_rhs(f0, s, bs, false, 2));
          }
      },
      3, true));
  return out;
}

inline std::vector<Group> all_groups(const GridPtr& g) {
  std::vector<Group> out;
  const auto E = KernelKind::euler;
  const auto B = KernelKind::bernoulli;
  out.push_back(kaneko_anchor_group(g));
  out.push_back(poly_euler_anchor_group(g));
  out.push_back(ohno_sasaki_anchor_group(g));
  out.push_back(polynomial_form_group(g, E, "eq1.12", {"statement"}, {true}));
  out.push_back(reduction_group(g, E, "eq1.13"));
  out.push_back(derivative_group(g, E, "eq1.14", {"statement"}, {true}, false));
  out.push_back(addition_group(g, E, "eq1.15", {"statement"}, {true}, false));
  out.push_back(euler_explicit_group(g));
  out.push_back(hurwitz_explicit_group(g));
  out.push_back(imatomi_explicit_group(g));
  out.push_back(imatomi_recurrence_group(g));
  out.push_back(poly_euler_block_group(g));
  out.push_back(stirling_shift_group(g, E, "thm2.2", "proof"));
  out.push_back(stirling_zero_group(g, E, "thm2.3", "proof"));
  out.push_back(bernoulli_mix_group(g, E, "thm2.4", true));
  out.push_back(frobenius_mix_group(g, E, "thm2.5"));
  out.push_back(polylog_derivative_group(g));
  out.push_back(symmetrized_depth_one_group(g));
  out.push_back(symmetrized_group(g));
  out.push_back(stirling_shift_group(g, B, "thm4.1a", "corrected"));
  out.push_back(stirling_zero_group(g, B, "thm4.1b", "corrected"));
  out.push_back(bernoulli_mix_group(g, B, "thm4.1c", false));
  out.push_back(frobenius_mix_group(g, B, "thm4.1d"));
  out.push_back(bernoulli_explicit_group(g));
  out.push_back(polynomial_form_group(g, B, "thm4.3", {"statement", "r-scaled"}, {false, true}));
  out.push_back(reduction_group(g, B, "thm4.4"));
  out.push_back(derivative_group(g, B, "thm4.5", {"statement", "r-scaled"}, {false, true}, false));
  out.push_back(derivative_group(g, B, "cor4.1", {"statement", "r-scaled"}, {false, true}, true));
  out.push_back(addition_group(g, B, "cor4.2", {"statement", "r-scaled"}, {false, true}, true));
  out.push_back(addition_group(g, B, "thm4.7", {"statement"}, {true}, false));
  out.push_back(li_phi_group(g));
  out.push_back(hl_depth_one_group(g));
  out.push_back(hl_polynomial_explicit_group(g));
  out.push_back(hl_numbers_explicit_group(g));
  out.push_back(poly_euler_lattice_group(g));
  out.push_back(bernoulli_lattice_group(g));
  out.push_back(hurwitz_lattice_group(g));
  out.push_back(hl_lattice_group(g));
  out.push_back(symbolic_lattice_group(g));
  out.push_back(symbolic_hl_lattice_group(g));
  for (auto& t : truncation_groups(g)) out.push_back(std::move(t));
  return out;
}

// Runs every task, each writing only its own slot, so the result does not
// depend on scheduling.
inline std::vector<Outcomes> run_tasks(const std::vector<CaseTask>& tasks, std::size_t nvariants_fallback,
                                       const std::vector<std::size_t>& nvariants, unsigned jobs) {
  std::vector<Outcomes> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const std::size_t nv = i < nvariants.size() ? nvariants[i] : nvariants_fallback;
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        CaseOutcome failed;
        failed.pass = false;
        failed.mismatch = Mismatch{0, std::nullopt, "error", e.what(), ""};
        results[i] = Outcomes(nv, failed);
      }
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace harness_detail

// Ids of every check group, in report order.
inline std::vector<std::string> check_ids() {
  auto g = std::make_shared<const harness_detail::Grid>(harness_detail::make_grid(HarnessConfig{}));
  std::vector<std::string> ids;
  for (const auto& grp : harness_detail::all_groups(g)) ids.push_back(grp.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline VerificationReport run_all(const HarnessConfig& cfg) {
  using namespace harness_detail;
  auto grid = std::make_shared<const Grid>(make_grid(cfg));
  std::vector<Group> groups = all_groups(grid);
  if (!cfg.ids.empty()) {
    std::vector<Group> chosen;
    for (const auto& id : cfg.ids) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& gr) { return gr.id == id; });
      if (it == groups.end()) throw Error(ErrorKind::usage, "unknown check id '" + id + "'");
      if (std::none_of(chosen.begin(), chosen.end(), [&](const Group& gr) { return gr.id == id; }))
        chosen.push_back(*it);
    }
    groups = std::move(chosen);
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.id < b.id; });

  // per group, per variant: accumulated case results
  std::vector<std::vector<std::vector<CaseResult>>> results(groups.size());
  std::vector<int> level_run(groups.size(), -1);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) results[gi].resize(groups[gi].variants.size());

  auto passing = [&](std::size_t gi) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < groups[gi].variants.size(); ++v) {
      const auto& cases = results[gi][v];
      if (std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.outcome.pass; }))
        names.push_back(groups[gi].variants[v]);
    }
    return names;
  };

  for (int level = 0;; ++level) {
    std::vector<CaseTask> tasks;
    std::vector<std::size_t> owner;
    std::vector<std::size_t> nvariants;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const bool wanted = level == 0 || (level <= cfg.escalation_ceiling && level < groups[gi].levels &&
                                         level_run[gi] == level - 1 && passing(gi).size() > 1);
      if (!wanted) continue;
      level_run[gi] = level;
      for (auto& t : groups[gi].cases(level)) {
        if (level > 0) t.params.push_back({"level", std::to_string(level)});
        tasks.push_back(std::move(t));
        owner.push_back(gi);
        nvariants.push_back(groups[gi].variants.size());
      }
    }
    if (tasks.empty() && level > 0) break;
    const auto outcomes = run_tasks(tasks, 1, nvariants, cfg.jobs);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const std::size_t gi = owner[i];
      if (outcomes[i].size() != groups[gi].variants.size())
        throw Error(ErrorKind::usage, "check " + groups[gi].id + " produced a wrong number of outcomes");
      for (std::size_t v = 0; v < outcomes[i].size(); ++v) results[gi][v].push_back({tasks[i].params, outcomes[i][v]});
    }
    if (level > cfg.escalation_ceiling) break;
  }

  VerificationReport report;
  report.order = cfg.order;
  report.seed = cfg.seed;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::vector<std::size_t> order(groups[gi].variants.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return groups[gi].variants[a] < groups[gi].variants[b]; });
    for (std::size_t v : order) report.checks.push_back({groups[gi].id, groups[gi].variants[v], results[gi][v]});

    Adjudication adj;
    adj.id = groups[gi].id;
    adj.variants = groups[gi].variants;
    adj.passing_variants = passing(gi);
    adj.grid_level = level_run[gi];
    if (adj.variants.size() == 1)
      adj.resolution = adj.passing_variants.empty() ? "fails" : "holds";
    else if (adj.passing_variants.empty())
      adj.resolution = "no-variant-holds";
    else if (adj.passing_variants.size() == 1)
      adj.resolution = "resolved:" + adj.passing_variants.front();
    else
      adj.resolution = "indistinguishable-at-scale";
    report.adjudication.push_back(std::move(adj));
  }
  return report;
}

}  // namespace polyfam
