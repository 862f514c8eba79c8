#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "polyfam/polylog.hpp"
#include "polyfam/special_numbers.hpp"

// Number and polynomial families defined by generating functions built from
// (multiple) polylogarithms and Hurwitz-Lerch sums. Every function returning a
// std::vector gives the exponential-generating-function coefficients for
// n = 0..N of the defining series; that is the value of record. The *_explicit
// functions evaluate closed-form sums independently of the series engine.
namespace polyfam {

namespace detail {

// num/den where both series vanish to exactly the same order `zeros` at t = 0.
inline TruncSeries<Rational> cancel_divide(const TruncSeries<Rational>& num, const TruncSeries<Rational>& den,
                                           std::size_t zeros) {
  return shift_div_t(num, zeros) * inverse(shift_div_t(den, zeros));
}

// 1 + e^t
inline TruncSeries<Rational> one_plus_exp(std::size_t order) {
  auto s = exp_linear(Rational(1), order);
  s[0] += Rational(1);
  return s;
}

inline void require_nondegenerate(const ParamTriple& p) {
  if (p.log_ab().is_zero()) throw Error(ErrorKind::degenerate, "ln a + ln b must be nonzero");
}

inline Rational power_of(const Rational& base, std::size_t e) { return pow(base, static_cast<long>(e)); }

// Calls f(chain) for every 0 < c_1 < ... < c_r <= max_top.
inline void for_each_strict_chain(std::size_t depth, long max_top, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> chain(depth);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long lo) {
    if (pos == depth) {
      f(chain);
      return;
    }
    const long remaining = static_cast<long>(depth - pos - 1);
    for (long m = lo; m + remaining <= max_top; ++m) {
      chain[pos] = m;
      rec(pos + 1, m + 1);
    }
  };
  rec(0, 1);
}

// Calls f(chain) for every 0 <= c_1 <= ... <= c_r <= max_top.
inline void for_each_weak_chain(std::size_t depth, long max_top, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> chain(depth);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long lo) {
    if (pos == depth) {
      f(chain);
      return;
    }
    for (long m = lo; m <= max_top; ++m) {
      chain[pos] = m;
      rec(pos + 1, m);
    }
  };
  rec(0, 0);
}

// Calls f(parts) for every weak composition of total into `parts` nonnegative parts.
inline void for_each_weak_composition(long total, std::size_t parts,
                                      const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> c(parts);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
    if (pos + 1 == parts) {
      c[pos] = left;
      f(c);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      c[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) f(c);
    return;
  }
  rec(0, total);
}

// prod_i chain[pairing[i]]^{-k_i}
inline Rational chain_weight(const MultiIndex& k, const std::vector<long>& chain, bool reversed_pairing) {
  Rational w(1);
  const std::size_t r = k.depth();
  for (std::size_t i = 0; i < r; ++i) {
    const long m = reversed_pairing ? chain[r - 1 - i] : chain[i];
    w *= inverse_power(Rational(m), k[i]);
  }
  return w;
}

// Abel value of sum_{s>=0} (-1)^s a(s) for a polynomial a of the given degree,
// via Euler's transform: sum_j (-1)^j (Delta^j a)(0) / 2^{j+1}.
inline Rational alternating_euler_sum(const std::function<Rational(long)>& a, std::size_t degree) {
  std::vector<Rational> diffs;
  diffs.reserve(degree + 1);
  for (std::size_t s = 0; s <= degree; ++s) diffs.push_back(a(static_cast<long>(s)));
  Rational total;
  Rational two_power(2);
  for (std::size_t j = 0; j <= degree; ++j) {
    total += sign_power(static_cast<long>(j)) * diffs[0] / two_power;
    two_power *= Rational(2);
    for (std::size_t s = 0; s + 1 < diffs.size(); ++s) diffs[s] = diffs[s + 1] - diffs[s];
    if (!diffs.empty()) diffs.pop_back();
  }
  return total;
}


// W[M] = sum over strict chains 0 < c_1 < ... < c_r = M of prod c_i^{-k_i},
// for M = 0..max_top. With reversed_pairing, k_1 goes with the largest entry.
// Results are memoized per thread; the table only depends on the arguments.
inline std::vector<Rational> strict_chain_weights(const MultiIndex& k, long max_top, bool reversed_pairing) {
  thread_local std::map<std::tuple<MultiIndex, long, bool>, std::vector<Rational>> memo;
  const auto key = std::make_tuple(k, max_top, reversed_pairing);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Rational> w(static_cast<std::size_t>(std::max(max_top, 0L)) + 1);
  for_each_strict_chain(k.depth(), max_top, [&](const std::vector<long>& chain) {
    w[static_cast<std::size_t>(chain.back())] += chain_weight(k, chain, reversed_pairing);
  });
  memo.emplace(key, w);
  return w;
}

// W[M] = sum over weak chains 0 <= c_1 <= ... <= c_r = M of prod (c_i + a - r + i)^{-k_i}.
inline std::vector<Rational> weak_chain_weights(const MultiIndex& k, const Rational& a, long max_top) {
  thread_local std::map<std::tuple<MultiIndex, Rational, long>, std::vector<Rational>> memo;
  const auto key = std::make_tuple(k, a, max_top);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long r = static_cast<long>(k.depth());
  std::vector<Rational> w(static_cast<std::size_t>(std::max(max_top, 0L)) + 1);
  for_each_weak_chain(k.depth(), max_top, [&](const std::vector<long>& chain) {
    Rational v(1);
    for (long i = 1; i <= r; ++i) v *= inverse_power(Rational(chain[i - 1]) + a - Rational(r) + Rational(i), k[i - 1]);
    w[static_cast<std::size_t>(chain.back())] += v;
  });
  memo.emplace(key, w);
  return w;
}

}  // namespace detail

// --- Kaneko poly-Bernoulli numbers: Li_k(1-e^{-t}) / (1-e^{-t}) -------------
inline std::vector<Rational> poly_bernoulli(int k, std::size_t order) {
  const auto num = multi_polylog_t(MultiIndex{k}, Rational(1), order + 1);
  const auto den = one_minus_exp_neg(Rational(1), order + 1);
  return egf_coeffs(detail::cancel_divide(num, den, 1));
}

// --- poly-Euler polynomials: 2 Li_k(1-e^{-t}) e^{xt} / (1 + e^t) -------------
template <CoefficientRing R>
std::vector<R> poly_euler_poly(int k, const R& x, std::size_t order) {
  const auto base = multi_polylog_t(MultiIndex{k}, Rational(1), order) * inverse(detail::one_plus_exp(order)) *
                    Rational(2);
  return egf_coeffs(promote<R>(base) * exp_linear<R>(x, order));
}

// --- Hurwitz type poly-Bernoulli numbers: Phi(1-e^{-t}, k, a) ----------------
inline std::vector<Rational> hurwitz_poly_bernoulli(long k, const Rational& a, std::size_t order) {
  return egf_coeffs(compose(hurwitz_lerch_phi(k, a, order), one_minus_exp_neg(Rational(1), order)));
}

// (-1)^n sum_{m=0}^{n} (-1)^m m! S(n,m) / (m+a)^k, summed to m <= n + extra.
inline Rational hurwitz_pb_explicit(long n, long k, const Rational& a, long extra = 0) {
  Rational acc;
  for (long m = 0; m <= n + extra; ++m) {
    const Rational s = stirling2(n, m);
    if (s.is_zero()) continue;
    acc += sign_power(m) * factorial(static_cast<unsigned long>(m)) * s * inverse_power(Rational(m) + a, k);
  }
  return sign_power(n) * acc;
}

// --- Hurwitz type poly-Euler numbers: 2 (1-e^{-t}) Phi(1-e^{-t},k,a) / (1+e^t)
inline std::vector<Rational> hurwitz_poly_euler(long k, const Rational& a, std::size_t order) {
  const auto w = one_minus_exp_neg(Rational(1), order);
  const auto phi = compose(hurwitz_lerch_phi(k, a, order), w);
  return egf_coeffs(w * phi * inverse(detail::one_plus_exp(order)) * Rational(2));
}

// --- Ohno-Sasaki poly-Euler numbers: Li_k(1-e^{-4t}) / (4t cosh t) -----------
inline std::vector<Rational> ohno_sasaki_poly_euler(int k, std::size_t order) {
  const auto li = multi_polylog_t(MultiIndex{k}, Rational(4), order + 1);
  const auto li_over_4t = shift_div_t(li, 1) * Rational(1, 4);
  const auto cosh = (exp_linear(Rational(1), order) + exp_linear(Rational(-1), order)) * Rational(1, 2);
  return egf_coeffs(li_over_4t * inverse(cosh));
}

// --- Imatomi multi-poly-Bernoulli numbers: Li_k(1-e^{-t}) / (1-e^{-t}) -------
inline std::vector<Rational> imatomi_mpb(const MultiIndex& k, std::size_t order) {
  const auto num = multi_polylog_t(k, Rational(1), order + 1);
  const auto den = one_minus_exp_neg(Rational(1), order + 1);
  return egf_coeffs(detail::cancel_divide(num, den, 1));
}

// How the entries of k are attached to a chain of indices in an explicit sum.
enum class ChainPairing {
  largest_first,  // k_1 on the largest index (descending chain m_1 > ... > m_r)
  largest_last,   // k_r on the largest index, matching the polylogarithm series
};

// (-1)^n sum over chains with largest index M <= n+1 of
// (-1)^{M-1} (M-1)! S(n, M-1) / prod m_i^{k_i}.
// Values for n = 0..N; the chain bound for each n is n + 1 + extra.
inline std::vector<Rational> imatomi_explicit_table(std::size_t order, const MultiIndex& k, ChainPairing pairing,
                                                    long extra = 0) {
  const long top_max = static_cast<long>(order) + 1 + extra;
  const auto w = detail::strict_chain_weights(k, top_max, pairing == ChainPairing::largest_first);
  std::vector<Rational> out(order + 1);
  for (long n = 0; n <= static_cast<long>(order); ++n) {
    Rational acc;
    for (long top = 1; top <= n + 1 + extra; ++top) {
      const auto& wt = w[static_cast<std::size_t>(top)];
      if (wt.is_zero()) continue;
      const Rational s = stirling2(n, top - 1);
      if (s.is_zero()) continue;
      acc += sign_power(top - 1) * factorial(static_cast<unsigned long>(top - 1)) * s * wt;
    }
    out[static_cast<std::size_t>(n)] = sign_power(n) * acc;
  }
  return out;
}

inline Rational imatomi_explicit(long n, const MultiIndex& k, ChainPairing pairing, long extra = 0) {
  return imatomi_explicit_table(static_cast<std::size_t>(n), k, pairing, extra).back();
}

struct RecurrenceOutcome {
  bool pass = true;
  std::size_t first_mismatch = 0;
  Rational lhs, rhs;
};

// Checks B_n^{(k)} = (1/(n+1)) (B_n^{(k')} - sum_{m=1}^{n-1} C(n, m-1) B_m^{(k)})
// for n = 0..N, where k' lowers by one either the first entry of k or the
// entry attached to the largest chain index (the last one).
inline RecurrenceOutcome imatomi_recurrence_check(const MultiIndex& k, std::size_t order, bool lower_first_entry) {
  const auto values = imatomi_mpb(k, order);
  const auto lowered = imatomi_mpb(lower_first_entry ? k.with_first_shifted(-1) : k.with_last_shifted(-1), order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational sum;
    for (std::size_t m = 1; m + 1 <= n; ++m)
      sum += binomial(static_cast<long>(n), static_cast<long>(m) - 1) * values[m];
    const Rational rhs = (lowered[n] - sum) / Rational(static_cast<long>(n + 1));
    if (rhs != values[n]) return {false, n, values[n], rhs};
  }
  return {};
}

// --- generalized multi poly-Euler polynomials ---------------------------------
// 2 Li_k(1 - e^{-(alpha+beta)t}) / (e^{-alpha t} + e^{beta t})^r, the x-free part.
inline TruncSeries<Rational> euler_kernel(const MultiIndex& k, const Rational& alpha, const Rational& beta,
                                          std::size_t order) {
  const auto li = multi_polylog_t(k, alpha + beta, order);
  const auto den = exp_linear(-alpha, order) + exp_linear(beta, order);
  return li * inverse(pow(den, k.depth())) * Rational(2);
}

// Kernel times e^{y t}.
template <CoefficientRing R>
std::vector<R> multi_poly_euler_shifted(const MultiIndex& k, const R& y, const Rational& alpha, const Rational& beta,
                                        std::size_t order) {
  return egf_coeffs(promote<R>(euler_kernel(k, alpha, beta, order)) * exp_linear<R>(y, order));
}

// Kernel times c^{r x t} = e^{r gamma x t}.
template <CoefficientRing R>
std::vector<R> multi_poly_euler(const MultiIndex& k, const R& x, const ParamTriple& p, std::size_t order) {
  const R y = x * (Rational(static_cast<long>(k.depth())) * p.gamma);
  return multi_poly_euler_shifted<R>(k, y, p.alpha, p.beta, order);
}

// How the sum over compositions in the explicit multi poly-Euler formula is read.
enum class CompositionReading {
  literal_parts,  // c_1 + ... + c_r = r, s = sum i c_i: a finite sum as printed
  euler_summed,   // every factor of 1/(1+e^{lambda t})^r expanded geometrically;
                  // the divergent alternating sum over s is Euler-transformed
};

// Values for n = 0..N; chains run to M <= n + r + extra.
inline std::vector<Rational> multi_poly_euler_explicit_table(std::size_t order, const MultiIndex& k, const Rational& x,
                                                             const ParamTriple& p, CompositionReading reading,
                                                             long extra = 0) {
  const long r = static_cast<long>(k.depth());
  const long top_n = static_cast<long>(order);
  const Rational lam = p.log_ab();
  const Rational rgx = Rational(r) * p.gamma * x;
  const Rational ra = Rational(r) * p.alpha;
  const auto w = detail::strict_chain_weights(k, top_n + r + extra, false);

  // diff[M][d] = sum_j (-1)^j C(M, j) (r gamma x - j lambda)^d
  std::vector<std::vector<Rational>> diff(w.size(), std::vector<Rational>(order + 1));
  for (std::size_t m = 0; m < w.size(); ++m) {
    if (w[m].is_zero()) continue;
    const long top = static_cast<long>(m);
    for (long j = 0; j <= top; ++j) {
      const Rational c = sign_power(j) * binomial(top, j);
      const Rational base = rgx - Rational(j) * lam;
      Rational power(1);
      for (std::size_t d = 0; d <= order; ++d) {
        diff[m][d] += c * power;
        power *= base;
      }
    }
  }

  // outer[i]: the sum over compositions, sign (-1)^s and multinomial weights folded in
  std::vector<Rational> outer(order + 1);
  for (long i = 0; i <= top_n; ++i) {
    if (reading == CompositionReading::euler_summed) {
      // r!/prod c_q! summed over c with sum q c_q = s counts the r-tuples of
      // geometric indices with total s, i.e. C(s+r-1, r-1).
      outer[static_cast<std::size_t>(i)] = detail::alternating_euler_sum(
          [&](long s) { return binomial(s + r - 1, r - 1) * pow(Rational(s) * lam + ra, i); },
          static_cast<std::size_t>(r - 1 + i));
    } else {
      detail::for_each_weak_composition(r, static_cast<std::size_t>(r), [&](const std::vector<long>& c) {
        long s = 0;
        Rational denom(1);
        for (std::size_t q = 0; q < c.size(); ++q) {
          s += static_cast<long>(q + 1) * c[q];
          denom *= factorial(static_cast<unsigned long>(c[q]));
        }
        outer[static_cast<std::size_t>(i)] +=
            sign_power(s) * factorial(static_cast<unsigned long>(r)) / denom * pow(Rational(s) * lam + ra, i);
      });
    }
  }

  std::vector<Rational> out(order + 1);
  for (long n = 0; n <= top_n; ++n) {
    Rational total;
    for (long i = 0; i <= n; ++i) {
      Rational inner;
      for (long m = 0; m <= n + r + extra; ++m) {
        const auto& wt = w[static_cast<std::size_t>(m)];
        if (!wt.is_zero()) inner += wt * diff[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - i)];
      }
      total += Rational(2) * binomial(n, i) * outer[static_cast<std::size_t>(i)] * inner;
    }
    out[static_cast<std::size_t>(n)] = total;
  }
  return out;
}

inline Rational multi_poly_euler_explicit(long n, const MultiIndex& k, const Rational& x, const ParamTriple& p,
                                          CompositionReading reading, long extra = 0) {
  return multi_poly_euler_explicit_table(static_cast<std::size_t>(n), k, x, p, reading, extra).back();
}

// --- generalized multi poly-Bernoulli polynomials -------------------------------
// Li_k(1 - e^{-(alpha+beta)t}) / (e^{beta t} - e^{-alpha t})^r. Both numerator
// and denominator vanish to order r; the common factor t^r is cancelled first.
inline TruncSeries<Rational> bernoulli_kernel(const MultiIndex& k, const Rational& alpha, const Rational& beta,
                                              std::size_t order) {
  if ((alpha + beta).is_zero()) throw Error(ErrorKind::degenerate, "ln a + ln b must be nonzero");
  const std::size_t r = k.depth();
  const auto num = shift_div_t(multi_polylog_t(k, alpha + beta, order + r), r);
  const auto diff = exp_linear(beta, order + 1) - exp_linear(-alpha, order + 1);
  return num * inverse(pow(shift_div_t(diff, 1), r));
}

template <CoefficientRing R>
std::vector<R> multi_poly_bernoulli_shifted(const MultiIndex& k, const R& y, const Rational& alpha,
                                            const Rational& beta, std::size_t order) {
  return egf_coeffs(promote<R>(bernoulli_kernel(k, alpha, beta, order)) * exp_linear<R>(y, order));
}

template <CoefficientRing R>
std::vector<R> multi_poly_bernoulli(const MultiIndex& k, const R& x, const ParamTriple& p, std::size_t order) {
  const R y = x * (Rational(static_cast<long>(k.depth())) * p.gamma);
  return multi_poly_bernoulli_shifted<R>(k, y, p.alpha, p.beta, order);
}

// Readings of the exponent in the explicit multi poly-Bernoulli sum
//   sum_{chains} prod m_i^{-k_i} sum_{j=0}^{M-r} (-1)^j C(M-r, j) X_j^n.
enum class ExponentReading {
  as_stated,  // X_j = r x - j ln a - (j+1) ln b
  with_ln_c,  // X_j = r x ln c - j ln a - (j+1) ln b
  corrected,  // X_j = r x ln c - j ln a - (j+r) ln b
};

// Values for n = 0..N; chains run to M <= n + r + extra.
inline std::vector<Rational> mpb_explicit_table(std::size_t order, const MultiIndex& k, const Rational& x,
                                                const ParamTriple& p, ExponentReading reading, long extra = 0) {
  detail::require_nondegenerate(p);
  const long r = static_cast<long>(k.depth());
  const long top_n = static_cast<long>(order);
  const Rational rx = reading == ExponentReading::as_stated ? Rational(r) * x : Rational(r) * x * p.gamma;
  const auto w = detail::strict_chain_weights(k, top_n + r + extra, false);

  // diff[M][d] = sum_{j <= M-r} (-1)^j C(M-r, j) X_j^d
  std::vector<std::vector<Rational>> diff(w.size(), std::vector<Rational>(order + 1));
  for (std::size_t m = 0; m < w.size(); ++m) {
    if (w[m].is_zero()) continue;
    const long span = static_cast<long>(m) - r;
    for (long j = 0; j <= span; ++j) {
      const long b_mult = reading == ExponentReading::corrected ? j + r : j + 1;
      const Rational base = rx - Rational(j) * p.alpha - Rational(b_mult) * p.beta;
      const Rational c = sign_power(j) * binomial(span, j);
      Rational power(1);
      for (std::size_t d = 0; d <= order; ++d) {
        diff[m][d] += c * power;
        power *= base;
      }
    }
  }

  std::vector<Rational> out(order + 1);
  for (long n = 0; n <= top_n; ++n) {
    Rational acc;
    for (long m = 0; m <= n + r + extra; ++m) {
      const auto& wt = w[static_cast<std::size_t>(m)];
      if (!wt.is_zero()) acc += wt * diff[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

inline Rational mpb_explicit(long n, const MultiIndex& k, const Rational& x, const ParamTriple& p,
                             ExponentReading reading, long extra = 0) {
  return mpb_explicit_table(static_cast<std::size_t>(n), k, x, p, reading, extra).back();
}

// --- Hurwitz-Lerch type multi poly-Bernoulli numbers and polynomials -----------
inline std::vector<Rational> hl_multi_pb(const MultiIndex& k, const Rational& a, std::size_t order) {
  return egf_coeffs(compose(hl_multi_phi(k, a, order), one_minus_exp_neg(Rational(1), order)));
}

// Phi_k(1-e^{-t}, a) e^{r x t}
template <CoefficientRing R>
std::vector<R> hl_multi_pb_poly(const MultiIndex& k, const Rational& a, const R& x, std::size_t order) {
  const auto base = compose(hl_multi_phi(k, a, order), one_minus_exp_neg(Rational(1), order));
  const R rx = x * Rational(static_cast<long>(k.depth()));
  return egf_coeffs(promote<R>(base) * exp_linear<R>(rx, order));
}

// sum over 0 <= m_1 <= ... <= m_r <= n of m_r! {n, m_r}_{-1, r x} / prod (m_i + a - r + i)^{k_i},
// for n = 0..N with the bound m_r <= n + extra.
template <CoefficientRing R>
std::vector<R> hl_mpb_explicit_table(std::size_t order, const MultiIndex& k, const Rational& a, const R& x,
                                     long extra = 0) {
  const long top_n = static_cast<long>(order);
  const R rho = x * Rational(static_cast<long>(k.depth()));
  const auto w = detail::weak_chain_weights(k, a, top_n + extra);
  const auto stirling = rbeta_stirling_table<R>(order, Rational(-1), rho);
  std::vector<R> out;
  out.reserve(order + 1);
  for (long n = 0; n <= top_n; ++n) {
    R acc(Rational(0));
    for (long m = 0; m <= n + extra; ++m) {
      const auto& wt = w[static_cast<std::size_t>(m)];
      if (wt.is_zero()) continue;
      // beyond the triangle use the alternating sum itself, which should vanish
      const R s = m <= n ? stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]
                         : rbeta_stirling<R>(n, m, Rational(-1), rho);
      acc = acc + s * (wt * factorial(static_cast<unsigned long>(m)));
    }
    out.push_back(acc);
  }
  return out;
}

template <CoefficientRing R>
R hl_mpb_explicit(long n, const MultiIndex& k, const Rational& a, const R& x, long extra = 0) {
  return hl_mpb_explicit_table<R>(static_cast<std::size_t>(n), k, a, x, extra).back();
}

// x = 0 case with {n, m}_{-1,0} = (-1)^{n+m} S(n, m).
inline std::vector<Rational> hl_mpb_numbers_explicit_table(std::size_t order, const MultiIndex& k,
                                                           const Rational& a, long extra = 0) {
  const long top_n = static_cast<long>(order);
  const auto w = detail::weak_chain_weights(k, a, top_n + extra);
  std::vector<Rational> out(order + 1);
  for (long n = 0; n <= top_n; ++n) {
    Rational acc;
    for (long m = 0; m <= n + extra; ++m) {
      const auto& wt = w[static_cast<std::size_t>(m)];
      if (wt.is_zero()) continue;
      acc += sign_power(n + m) * factorial(static_cast<unsigned long>(m)) * stirling2(n, m) * wt;
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

inline Rational hl_mpb_numbers_explicit(long n, const MultiIndex& k, const Rational& a, long extra = 0) {
  return hl_mpb_numbers_explicit_table(static_cast<std::size_t>(n), k, a, extra).back();
}

// --- symmetrized generalizations -------------------------------------------------
// D_n^{(m)} for 0 <= n <= max_n, 0 <= m <= max_m, indexed [n][m]:
//   (1/lambda^n) sum_k C(m,k) E_n^{(-k)}(x;a,b,c) ((y ln c + ln a)/lambda)^{m-k}.
inline std::vector<std::vector<Rational>> symmetrized_D_table(std::size_t max_n, std::size_t max_m,
                                                              const Rational& x, const Rational& y,
                                                              const ParamTriple& p) {
  detail::require_nondegenerate(p);
  const Rational lam = p.log_ab();
  const Rational ybar = (y * p.gamma + p.alpha) / lam;
  std::vector<std::vector<Rational>> e(max_m + 1);
  for (std::size_t kk = 0; kk <= max_m; ++kk)
    e[kk] = multi_poly_euler<Rational>(MultiIndex{-static_cast<int>(kk)}, x, p, max_n);
  std::vector<std::vector<Rational>> out(max_n + 1, std::vector<Rational>(max_m + 1));
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Rational scale = Rational(1) / detail::power_of(lam, n);
    for (std::size_t m = 0; m <= max_m; ++m) {
      Rational acc;
      for (std::size_t kk = 0; kk <= m; ++kk)
        acc += binomial(static_cast<long>(m), static_cast<long>(kk)) * e[kk][n] * detail::power_of(ybar, m - kk);
      out[n][m] = acc * scale;
    }
  }
  return out;
}

inline Rational symmetrized_D(std::size_t m, std::size_t n, const Rational& x, const Rational& y,
                              const ParamTriple& p) {
  return symmetrized_D_table(n, m, x, y, p)[n][m];
}

// Which depth-(r-1) polynomial enters the r-fold symmetrization.
enum class SymmetrizationConvention {
  literal,  // E_n^{(-k_1..-k_{r-1})}(x;a,b,c) / (ln a + ln b)^n with its own depth r-1
  reduced,  // E_n^{(-k_1..-k_{r-1})}(((r-1) x ln c + ln a)/(ln a + ln b)) with a = 1, b = c = e
};

// Calligraphic D_n^{(m)} for r >= 2, indexed [n][m].
inline std::vector<std::vector<Rational>> symmetrized_Dcal_table(std::size_t r, std::size_t max_n, std::size_t max_m,
                                                                 const Rational& x, const Rational& y,
                                                                 const ParamTriple& p,
                                                                 SymmetrizationConvention convention) {
  if (r < 2) throw Error(ErrorKind::usage, "the r-fold symmetrization needs r >= 2");
  detail::require_nondegenerate(p);
  const Rational lam = p.log_ab();
  const Rational rm1(static_cast<long>(r - 1));
  const Rational ybar = (rm1 * y * p.gamma + p.alpha) / lam;
  const Rational xbar = (rm1 * x * p.gamma + p.alpha) / lam;
  const ParamTriple reduced_params{Rational(0), Rational(1), Rational(1)};

  std::map<std::vector<int>, std::vector<Rational>> cache;
  auto values_for = [&](const std::vector<long>& parts) -> const std::vector<Rational>& {
    std::vector<int> idx;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) idx.push_back(-static_cast<int>(parts[i]));
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
    std::vector<Rational> vals;
    if (convention == SymmetrizationConvention::literal) {
      vals = multi_poly_euler<Rational>(MultiIndex(idx), x, p, max_n);
      for (std::size_t n = 0; n <= max_n; ++n) vals[n] /= detail::power_of(lam, n);
    } else {
      vals = multi_poly_euler<Rational>(MultiIndex(idx), xbar, reduced_params, max_n);
    }
    return cache.emplace(idx, std::move(vals)).first->second;
  };

  std::vector<std::vector<Rational>> out(max_n + 1, std::vector<Rational>(max_m + 1));
  for (std::size_t m = 0; m <= max_m; ++m) {
    detail::for_each_weak_composition(static_cast<long>(m), r, [&](const std::vector<long>& parts) {
      Rational multinomial = factorial(m);
      for (long v : parts) multinomial /= factorial(static_cast<unsigned long>(v));
      const Rational tail = multinomial * detail::power_of(ybar, static_cast<std::size_t>(parts.back()));
      const auto& vals = values_for(parts);
      for (std::size_t n = 0; n <= max_n; ++n) out[n][m] += vals[n] * tail;
    });
  }
  return out;
}

inline Rational symmetrized_Dcal(std::size_t m, std::size_t n, std::size_t r, const Rational& x, const Rational& y,
                                 const ParamTriple& p,
                                 SymmetrizationConvention convention = SymmetrizationConvention::literal) {
  return symmetrized_Dcal_table(r, n, m, x, y, p, convention)[n][m];
}

}  // namespace polyfam
