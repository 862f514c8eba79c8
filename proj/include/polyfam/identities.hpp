#pragma once

#include <cstddef>
#include <vector>

#include "polyfam/bi_series.hpp"
#include "polyfam/families.hpp"

// Right-hand sides of the expansion identities satisfied by the families. Each
// takes the x-free kernel K(t) of a family (so F(y) := K(t) e^{y t}) and
// returns the EGF values the identity predicts; the caller compares them
// against the generating-function values.
namespace polyfam {

// n! [t^n] K(t) e^{y t} for n = 0..order(K).
inline std::vector<Rational> shifted_values(const TruncSeries<Rational>& kernel, const Rational& y) {
  return egf_coeffs(kernel * exp_linear(y, kernel.order()));
}

// Tables F(-m shift) for m = 0..m_max.
inline std::vector<std::vector<Rational>> shifted_tables(const TruncSeries<Rational>& kernel, const Rational& shift,
                                                         std::size_t m_max) {
  std::vector<std::vector<Rational>> f(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m)
    f[m] = (m > 0 && shift.is_zero()) ? f[0] : shifted_values(kernel, -Rational(static_cast<long>(m)) * shift);
  return f;
}

// sum_{m=0}^{n+extra} sum_{l=m}^{n} step^l S(l,m) C(n,l) F_{n-l}(-m shift) P_m(x),
// P_m the rising factorial x(x+1)..(x+m-1) or the falling one x(x-1)..(x-m+1).
// f holds the tables F(-m shift) from shifted_tables, with at least order+extra+1 rows.
inline std::vector<Rational> stirling_expansion_rhs(const std::vector<std::vector<Rational>>& f, std::size_t order,
                                                    const Rational& step, const Rational& x, bool falling,
                                                    long extra = 0) {
  const std::size_t m_max = order + static_cast<std::size_t>(extra);
  if (f.size() <= m_max) throw Error(ErrorKind::out_of_range, "too few shifted tables");
  std::vector<Rational> fact_poly(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m)
    fact_poly[m] = falling ? falling_factorial(x, static_cast<long>(m)) : rising_factorial(x, static_cast<long>(m));
  std::vector<Rational> step_power(order + 1);
  step_power[0] = Rational(1);
  for (std::size_t l = 1; l <= order; ++l) step_power[l] = step_power[l - 1] * step;
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc;
    for (std::size_t m = 0; m <= n + static_cast<std::size_t>(extra); ++m) {
      if (fact_poly[m].is_zero()) continue;
      Rational inner;
      for (std::size_t l = 0; l <= n; ++l) {
        const Rational s = stirling2(static_cast<long>(l), static_cast<long>(m));
        if (s.is_zero()) continue;  // l < m
        inner += step_power[l] * s * binomial(static_cast<long>(n), static_cast<long>(l)) * f[m][n - l];
      }
      acc += inner * fact_poly[m];
    }
    out[n] = acc;
  }
  return out;
}

// sum_{m=0}^{n+extra} C(n,m) sum_{l=0}^{n-m} C(n-m,l) / D(l) S(l+s,s) F_{n-m-l}(0) Bs_m
// with D(l) = C(l+s, l), or with the lower entry written as s! when factorial_lower.
// Row n needs D(0..n); the table stops before the first row whose D vanishes, so
// a short result means that row and all later ones are undefined.
inline std::vector<Rational> bernoulli_expansion_rhs(const std::vector<Rational>& f0, long s,
                                                     const std::vector<Rational>& bs, bool factorial_lower,
                                                     long extra = 0) {
  const std::size_t order = bs.size() - 1;
  long s_factorial = 1;
  for (long i = 2; i <= s; ++i) s_factorial *= i;
  std::vector<Rational> g;  // S(l+s, s) / D(l)
  for (std::size_t l = 0; l <= order; ++l) {
    const long top = static_cast<long>(l) + s;
    const Rational d = binomial(top, factorial_lower ? s_factorial : static_cast<long>(l));
    if (d.is_zero()) break;
    g.push_back(stirling2(top, s) / d);
  }
  const std::size_t rows = g.size();
  std::vector<Rational> h(rows);  // h[q] = sum_l C(q,l) g[l] F_{q-l}(0)
  for (std::size_t q = 0; q < rows; ++q)
    for (std::size_t l = 0; l <= q; ++l)
      h[q] += binomial(static_cast<long>(q), static_cast<long>(l)) * g[l] * f0[q - l];
  std::vector<Rational> out(rows);
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t m = 0; m <= n + static_cast<std::size_t>(extra); ++m) {
      const Rational c = binomial(static_cast<long>(n), static_cast<long>(m));
      if (c.is_zero()) continue;  // m > n
      out[n] += c * bs[m] * h[n - m];
    }
  return out;
}

// sum_{m=0}^{n} C(n,m) / (1-lam)^s sum_{j=0}^{s} C(s,j) (-lam)^{s-j} F_{n-m}(j) H_m,
// f[j] holding F(j) = K e^{j t} for j = 0..s.
inline std::vector<Rational> frobenius_expansion_rhs(const std::vector<std::vector<Rational>>& f, long s,
                                                     const Rational& lam, const std::vector<Rational>& hs) {
  if (static_cast<long>(f.size()) <= s) throw Error(ErrorKind::out_of_range, "too few shifted tables");
  const std::size_t order = hs.size() - 1;
  const Rational scale = Rational(1) / pow(Rational(1) - lam, s);
  std::vector<Rational> mixed(order + 1);  // sum_j C(s,j) (-lam)^{s-j} F_d(j)
  for (long j = 0; j <= s; ++j) {
    const Rational c = binomial(s, j) * pow(-lam, s - j);
    for (std::size_t d = 0; d <= order; ++d) mixed[d] += c * f[static_cast<std::size_t>(j)][d];
  }
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc;
    for (std::size_t m = 0; m <= n; ++m)
      acc += binomial(static_cast<long>(n), static_cast<long>(m)) * mixed[n - m] * hs[m];
    out[n] = acc * scale;
  }
  return out;
}

// sum_{i=0}^{n} C(n,i) (step z)^{n-i} f_i
inline std::vector<Rational> binomial_shift_rhs(const std::vector<Rational>& f, const Rational& step,
                                                const Rational& z) {
  std::vector<Rational> out(f.size());
  std::vector<Rational> power(f.size());
  if (!f.empty()) power[0] = Rational(1);
  for (std::size_t i = 1; i < f.size(); ++i) power[i] = power[i - 1] * (step * z);
  for (std::size_t n = 0; n < f.size(); ++n) {
    Rational acc;
    for (std::size_t i = 0; i <= n; ++i)
      acc += binomial(static_cast<long>(n), static_cast<long>(i)) * power[n - i] * f[i];
    out[n] = acc;
  }
  return out;
}

// Closed form of the double generating function sum D_n^{(m)} t^n/n! u^m/m!.
// For r = 1:
//   2 e^{Y u} e^{X t} e^{t+u} (1-e^{-t}) / ((e^t+1)(e^t+e^u-e^{t+u})),
//   X = (x ln c + ln a)/lambda, Y = (y ln c + ln a)/lambda.
// For r >= 2:
//   2 e^{Y u} e^{(r-1) X t} e^{C(r,2) u + (r-1) t} (1-e^{-t})^{r-1}
//     / ((1+e^t)^{r-1} prod_{i=1}^{r-1} (e^t + e^{iu} - e^{t+iu})),
//   X = ((r-1) x ln c + ln a)/lambda, Y = ((r-1) y ln c + ln a)/lambda.
inline BiTruncSeries<Rational> symmetrized_gf(std::size_t r, const Rational& x, const Rational& y,
                                              const ParamTriple& p, std::size_t nt, std::size_t nu) {
  if (r == 0) throw Error(ErrorKind::usage, "depth must be positive");
  const Rational lam = p.log_ab();
  if (lam.is_zero()) throw Error(ErrorKind::degenerate, "ln a + ln b must be nonzero");
  using Bi = BiTruncSeries<Rational>;
  const Rational rm1(static_cast<long>(r == 1 ? 1 : r - 1));
  const Rational xbar = (rm1 * x * p.gamma + p.alpha) / lam;
  const Rational ybar = (rm1 * y * p.gamma + p.alpha) / lam;
  const Bi w = Bi::from_univariate(one_minus_exp_neg(Rational(1), nt), nt, nu);
  auto et_plus_eiu_minus = [&](long i) {
    return bi_exp_linear(Rational(1), Rational(0), nt, nu) + bi_exp_linear(Rational(0), Rational(i), nt, nu) -
           bi_exp_linear(Rational(1), Rational(i), nt, nu);
  };
  Bi one_plus_et = bi_exp_linear(Rational(1), Rational(0), nt, nu);
  one_plus_et(0, 0) += Rational(1);

  if (r == 1) {
    const Bi num = bi_exp_linear(xbar + Rational(1), ybar + Rational(1), nt, nu) * w * Rational(2);
    return num * inverse(one_plus_et * et_plus_eiu_minus(1));
  }
  const long rl = static_cast<long>(r);
  const Rational u_rate = ybar + binomial(rl, 2);
  const Rational t_rate = rm1 * xbar + rm1;
  Bi num = bi_exp_linear(t_rate, u_rate, nt, nu) * pow(w, r - 1) * Rational(2);
  Bi den = pow(one_plus_et, r - 1);
  for (long i = 1; i < rl; ++i) den = den * et_plus_eiu_minus(i);
  return num * inverse(den);
}

}  // namespace polyfam
