#pragma once

#include <cstddef>
#include <vector>

#include "polyfam/series.hpp"

namespace polyfam {

// Stirling numbers of the second kind S(n, m) for 0 <= m <= n <= max_n,
// filled by S(n+1, m) = m S(n, m) + S(n, m-1).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t max_n) : max_n_(max_n), rows_(max_n + 1) {
    rows_[0] = {Rational(1)};
    for (std::size_t n = 0; n < max_n; ++n) {
      auto& next = rows_[n + 1];
      next.assign(n + 2, Rational());
      for (std::size_t m = 1; m <= n + 1; ++m) {
        Rational v = (m <= n) ? rows_[n][m] * Rational(static_cast<long>(m)) : Rational();
        v += rows_[n][m - 1];
        next[m] = v;
      }
    }
  }

  std::size_t max_n() const { return max_n_; }

  Rational operator()(std::size_t n, std::size_t m) const {
    if (n > max_n_) throw Error(ErrorKind::out_of_range, "Stirling table row beyond max_n");
    return m <= n ? rows_[n][m] : Rational();
  }

 private:
  std::size_t max_n_;
  std::vector<std::vector<Rational>> rows_;
};

inline Rational stirling2(long n, long m) {
  if (n < 0 || m < 0 || m > n) return Rational();
  static const StirlingTable table(96);
  if (static_cast<std::size_t>(n) <= table.max_n()) return table(n, m);
  return StirlingTable(static_cast<std::size_t>(n))(n, m);
}

// (r,beta)-Stirling numbers from the finite expansion of
// (1/(beta^m m!)) e^{rho t} (e^{beta t} - 1)^m:
//   (1/(beta^m m!)) sum_j C(m,j) (-1)^{m-j} (j beta + rho)^n.
// rho may be symbolic (a polynomial in x).
template <CoefficientRing R>
R rbeta_stirling(long n, long m, const Rational& beta, const R& rho) {
  if (beta.is_zero()) throw Error(ErrorKind::parameter, "(r,beta)-Stirling numbers need beta != 0");
  if (m < 0 || n < 0) return R(Rational(0));
  R acc(Rational(0));
  for (long j = 0; j <= m; ++j) {
    const R base = rho + R(Rational(j) * beta);
    acc = acc + ring_pow(base, n) * (binomial(m, j) * sign_power(m - j));
  }
  return acc * (Rational(1) / (pow(beta, m) * factorial(static_cast<unsigned long>(m))));
}

// Rows 0..max_n of the (r,beta)-Stirling triangle by
// S(n+1, m) = (rho + m beta) S(n, m) + S(n, m-1), S(0, 0) = 1; indexed [n][m].
template <CoefficientRing R>
std::vector<std::vector<R>> rbeta_stirling_table(std::size_t max_n, const Rational& beta, const R& rho) {
  std::vector<std::vector<R>> rows(max_n + 1);
  rows[0] = {R(Rational(1))};
  for (std::size_t n = 0; n < max_n; ++n) {
    auto& next = rows[n + 1];
    next.assign(n + 2, R(Rational(0)));
    for (std::size_t m = 0; m <= n; ++m)
      next[m] = next[m] + rows[n][m] * (rho + R(Rational(static_cast<long>(m)) * beta));
    for (std::size_t m = 1; m <= n + 1; ++m) next[m] = next[m] + rows[n][m - 1];
  }
  return rows;
}

// x (x+1) ... (x+m-1)
template <CoefficientRing R>
R rising_factorial(const R& x, long m) {
  R acc(Rational(1));
  for (long i = 0; i < m; ++i) acc = acc * (x + R(Rational(i)));
  return acc;
}

// x (x-1) ... (x-m+1)
template <CoefficientRing R>
R falling_factorial(const R& x, long m) {
  R acc(Rational(1));
  for (long i = 0; i < m; ++i) acc = acc * (x - R(Rational(i)));
  return acc;
}

// Series of (t/(e^t - 1))^s e^{x0 t} to the given order.
template <CoefficientRing R>
TruncSeries<R> bernoulli_higher_series(long s, const R& x0, std::size_t order) {
  if (s < 0) throw Error(ErrorKind::parameter, "order s of higher-order Bernoulli polynomials must be >= 0");
  TruncSeries<Rational> quotient(order);  // (e^t - 1)/t
  for (std::size_t n = 0; n <= order; ++n) quotient[n] = Rational(1) / factorial(n + 1);
  const auto kernel = pow(inverse(quotient), static_cast<unsigned long>(s));
  return promote<R>(kernel) * exp_linear<R>(x0, order);
}

template <CoefficientRing R>
R bernoulli_higher(std::size_t n, long s, const R& x0) {
  return egf_coeff(bernoulli_higher_series<R>(s, x0, n), n);
}

// Series of ((1-lambda)/(e^t - lambda))^s e^{x0 t}.
template <CoefficientRing R>
TruncSeries<R> frobenius_euler_series(long s, const R& x0, const Rational& lambda, std::size_t order) {
  if (lambda == Rational(1)) throw Error(ErrorKind::parameter, "Frobenius-Euler polynomials need lambda != 1");
  if (s < 0) throw Error(ErrorKind::parameter, "order s must be >= 0");
  auto denom = exp_linear(Rational(1), order);
  denom[0] -= lambda;
  const auto base = inverse(denom) * (Rational(1) - lambda);
  return promote<R>(pow(base, static_cast<unsigned long>(s))) * exp_linear<R>(x0, order);
}

template <CoefficientRing R>
R frobenius_euler(std::size_t n, long s, const R& x0, const Rational& lambda) {
  return egf_coeff(frobenius_euler_series<R>(s, x0, lambda, n), n);
}

// Bernoulli numbers B_0..B_max from sum_{j=0}^{n} C(n+1, j) B_j = 0 (B_1 = -1/2).
// Independent of the series engine.
inline std::vector<Rational> classical_bernoulli_table(std::size_t max_n) {
  std::vector<Rational> b(max_n + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) acc += binomial(static_cast<long>(n + 1), static_cast<long>(j)) * b[j];
    b[n] = -acc / Rational(static_cast<long>(n + 1));
  }
  return b;
}

inline Rational classical_bernoulli(std::size_t n) { return classical_bernoulli_table(n)[n]; }

// Euler polynomials E_0(x0)..E_max(x0) from 2 e^{xt} = (e^t + 1) sum E_n(x) t^n/n!,
// i.e. E_n(x) = x^n - (1/2) sum_{j<n} C(n, j) E_j(x). Independent of the series engine.
template <CoefficientRing R>
std::vector<R> classical_euler_poly_table(std::size_t max_n, const R& x0) {
  std::vector<R> e;
  e.reserve(max_n + 1);
  R power(Rational(1));
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n > 0) power = power * x0;
    R acc(Rational(0));
    for (std::size_t j = 0; j < n; ++j) acc = acc + e[j] * binomial(static_cast<long>(n), static_cast<long>(j));
    e.push_back(power - acc * Rational(1, 2));
  }
  return e;
}

template <CoefficientRing R>
R classical_euler_poly(std::size_t n, const R& x0) {
  return classical_euler_poly_table(n, x0)[n];
}

}  // namespace polyfam
