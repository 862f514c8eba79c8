#pragma once

#include <cstddef>
#include <vector>

#include "polyfam/series.hpp"

namespace polyfam {

// Truncated bivariate series sum c[i][j] t^i u^j with 0 <= i <= Nt, 0 <= j <= Nu.
template <CoefficientRing R>
class BiTruncSeries {
 public:
  BiTruncSeries(std::size_t order_t, std::size_t order_u)
      : nt_(order_t), nu_(order_u), coeffs_((order_t + 1) * (order_u + 1), R(Rational(0))) {}

  static BiTruncSeries one(std::size_t order_t, std::size_t order_u) {
    BiTruncSeries s(order_t, order_u);
    s(0, 0) = R(Rational(1));
    return s;
  }
  static BiTruncSeries constant(const R& c, std::size_t order_t, std::size_t order_u) {
    BiTruncSeries s(order_t, order_u);
    s(0, 0) = c;
    return s;
  }

  // Embed a series in t alone (or in u alone when in_u is set).
  static BiTruncSeries from_univariate(const TruncSeries<R>& f, std::size_t order_t, std::size_t order_u,
                                       bool in_u = false) {
    BiTruncSeries s(order_t, order_u);
    const std::size_t lim = in_u ? order_u : order_t;
    for (std::size_t i = 0; i <= std::min(lim, f.order()); ++i) {
      if (in_u)
        s(0, i) = f[i];
      else
        s(i, 0) = f[i];
    }
    return s;
  }

  std::size_t order_t() const { return nt_; }
  std::size_t order_u() const { return nu_; }

  R& operator()(std::size_t i, std::size_t j) { return coeffs_.at(i * (nu_ + 1) + j); }
  const R& operator()(std::size_t i, std::size_t j) const { return coeffs_.at(i * (nu_ + 1) + j); }

  BiTruncSeries& operator+=(const BiTruncSeries& o) {
    require_same_orders(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return *this;
  }
  BiTruncSeries& operator-=(const BiTruncSeries& o) {
    require_same_orders(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return *this;
  }
  friend BiTruncSeries operator+(BiTruncSeries a, const BiTruncSeries& b) { return a += b; }
  friend BiTruncSeries operator-(BiTruncSeries a, const BiTruncSeries& b) { return a -= b; }

  friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b) {
    a.require_same_orders(b);
    BiTruncSeries out(a.nt_, a.nu_);
    for (std::size_t i1 = 0; i1 <= a.nt_; ++i1)
      for (std::size_t j1 = 0; j1 <= a.nu_; ++j1) {
        const R& x = a(i1, j1);
        if (x.is_zero()) continue;
        for (std::size_t i2 = 0; i1 + i2 <= a.nt_; ++i2)
          for (std::size_t j2 = 0; j1 + j2 <= a.nu_; ++j2) {
            const R& y = b(i2, j2);
            if (y.is_zero()) continue;
            out(i1 + i2, j1 + j2) = out(i1 + i2, j1 + j2) + x * y;
          }
      }
    return out;
  }

  friend BiTruncSeries operator*(BiTruncSeries a, const Rational& c) {
    for (auto& v : a.coeffs_) v = v * c;
    return a;
  }

  friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) {
    return a.nt_ == b.nt_ && a.nu_ == b.nu_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_orders(const BiTruncSeries& o) const {
    if (o.nt_ != nt_ || o.nu_ != nu_) throw Error(ErrorKind::usage, "bivariate series order mismatch");
  }

  std::size_t nt_;
  std::size_t nu_;
  std::vector<R> coeffs_;
};

// Reciprocal; the (0,0) coefficient must be a unit.
template <CoefficientRing R>
BiTruncSeries<R> inverse(const BiTruncSeries<R>& f) {
  const std::size_t nt = f.order_t(), nu = f.order_u();
  const R c0_inv = unit_inverse(f(0, 0));
  BiTruncSeries<R> g(nt, nu);
  for (std::size_t i = 0; i <= nt; ++i)
    for (std::size_t j = 0; j <= nu; ++j) {
      if (i == 0 && j == 0) {
        g(0, 0) = c0_inv;
        continue;
      }
      R acc(Rational(0));
      for (std::size_t p = 0; p <= i; ++p)
        for (std::size_t q = 0; q <= j; ++q) {
          if (p == 0 && q == 0) continue;
          if (f(p, q).is_zero()) continue;
          acc = acc + f(p, q) * g(i - p, j - q);
        }
      g(i, j) = -(acc * c0_inv);
    }
  return g;
}

template <CoefficientRing R>
BiTruncSeries<R> pow(const BiTruncSeries<R>& f, unsigned long exponent) {
  BiTruncSeries<R> result = BiTruncSeries<R>::one(f.order_t(), f.order_u());
  for (unsigned long i = 0; i < exponent; ++i) result = result * f;
  return result;
}

// e^{lambda_t t + lambda_u u}.
template <CoefficientRing R>
BiTruncSeries<R> bi_exp_linear(const R& lambda_t, const R& lambda_u, std::size_t order_t, std::size_t order_u) {
  const auto et = exp_linear<R>(lambda_t, order_t);
  const auto eu = exp_linear<R>(lambda_u, order_u);
  BiTruncSeries<R> s(order_t, order_u);
  for (std::size_t i = 0; i <= order_t; ++i)
    for (std::size_t j = 0; j <= order_u; ++j) s(i, j) = et[i] * eu[j];
  return s;
}

inline BiTruncSeries<Rational> bi_exp_linear(const Rational& lambda_t, const Rational& lambda_u,
                                              std::size_t order_t, std::size_t order_u) {
  return bi_exp_linear<Rational>(lambda_t, lambda_u, order_t, order_u);
}

// i! j! c[i][j]: the coefficient of (t^i/i!)(u^j/j!).
template <CoefficientRing R>
R egf_coeff(const BiTruncSeries<R>& f, std::size_t i, std::size_t j) {
  if (i > f.order_t() || j > f.order_u()) throw Error(ErrorKind::out_of_range, "bivariate coefficient out of range");
  return f(i, j) * (factorial(i) * factorial(j));
}

}  // namespace polyfam
