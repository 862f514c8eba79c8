#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "polyfam/ring.hpp"

namespace polyfam {

// Truncated power series sum_{n=0}^{N} c[n] t^n over a coefficient ring.
// Coefficients are ordinary; the exponential-generating-function view
// (multiplying by n!) is applied only by egf_coeff.
template <CoefficientRing R>
class TruncSeries {
 public:
  TruncSeries() : coeffs_(1) {}
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::usage, "series needs at least one coefficient");
  }

  static TruncSeries zero(std::size_t order) { return TruncSeries(order); }
  static TruncSeries one(std::size_t order) { return constant(R(Rational(1)), order); }
  static TruncSeries constant(const R& c, std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  // c t^k, truncated.
  static TruncSeries monomial(const R& c, std::size_t k, std::size_t order) {
    TruncSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  // Cauchy product truncated at the common order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.coeffs_.size();
    TruncSeries out(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend TruncSeries operator*(TruncSeries a, const Rational& c) {
    for (auto& v : a.coeffs_) v = v * c;
    return a;
  }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return std::move(a) * c; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same_order(const TruncSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw Error(ErrorKind::usage, "series order mismatch (" + std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
  }

  std::vector<R> coeffs_;
};

template <CoefficientRing R>
TruncSeries<R> scale(TruncSeries<R> f, const R& c) {
  std::vector<R> v = f.coeffs();
  for (auto& x : v) x = x * c;
  return TruncSeries<R>(std::move(v));
}

// Reciprocal of a series with an invertible constant term.
template <CoefficientRing R>
TruncSeries<R> inverse(const TruncSeries<R>& f) {
  const std::size_t n = f.order();
  const R c0_inv = unit_inverse(f[0]);
  TruncSeries<R> g(n);
  g[0] = c0_inv;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(Rational(0));
    for (std::size_t i = 1; i <= k; ++i) {
      if (f[i].is_zero()) continue;
      acc = acc + f[i] * g[k - i];
    }
    g[k] = -(acc * c0_inv);
  }
  return g;
}

template <CoefficientRing R>
TruncSeries<R> pow(const TruncSeries<R>& f, unsigned long exponent) {
  TruncSeries<R> result = TruncSeries<R>::one(f.order());
  TruncSeries<R> base = f;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

// f(g(t)) for an inner series with zero constant term, by Horner's scheme.
// The result has the order of g; coefficients of f beyond that order are
// irrelevant because g^m = O(t^m).
template <CoefficientRing R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  if (!g[0].is_zero()) throw Error(ErrorKind::usage, "composition requires a zero inner constant term");
  const std::size_t n = g.order();
  const std::size_t top = std::min(f.order(), n);
  TruncSeries<R> acc = TruncSeries<R>::constant(f[top], n);
  for (std::size_t i = top; i-- > 0;) {
    acc = acc * g;
    acc[0] = acc[0] + f[i];
  }
  return acc;
}

// e^{lambda t}: coefficients lambda^n / n!.
template <CoefficientRing R>
TruncSeries<R> exp_linear(const R& lambda, std::size_t order) {
  TruncSeries<R> s(order);
  R power(Rational(1));
  Rational inv_fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      power = power * lambda;
      inv_fact /= Rational(static_cast<long>(n));
    }
    s[n] = power * inv_fact;
  }
  return s;
}

inline TruncSeries<Rational> exp_linear(const Rational& lambda, std::size_t order) {
  return exp_linear<Rational>(lambda, order);
}

// f / t^k, requiring f[0..k-1] = 0; the result has order N - k.
template <CoefficientRing R>
TruncSeries<R> shift_div_t(const TruncSeries<R>& f, std::size_t k) {
  if (k > f.order()) throw Error(ErrorKind::usage, "shift exceeds series order");
  for (std::size_t i = 0; i < k; ++i)
    if (!f[i].is_zero())
      throw Error(ErrorKind::not_divisible, "coefficient of t^" + std::to_string(i) + " is nonzero");
  std::vector<R> v(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
  return TruncSeries<R>(std::move(v));
}

// t^k f, truncated to the same order.
template <CoefficientRing R>
TruncSeries<R> shift_mul_t(const TruncSeries<R>& f, std::size_t k) {
  TruncSeries<R> out(f.order());
  for (std::size_t i = 0; i + k <= f.order(); ++i) out[i + k] = f[i];
  return out;
}

// Keep or zero-extend to a new order.
template <CoefficientRing R>
TruncSeries<R> truncate(const TruncSeries<R>& f, std::size_t order) {
  TruncSeries<R> out(order);
  for (std::size_t i = 0; i <= std::min(order, f.order()); ++i) out[i] = f[i];
  return out;
}

// d/dt; the result has order N - 1 (order 0 stays 0).
template <CoefficientRing R>
TruncSeries<R> derivative(const TruncSeries<R>& f) {
  if (f.order() == 0) return TruncSeries<R>(0);
  TruncSeries<R> out(f.order() - 1);
  for (std::size_t i = 1; i <= f.order(); ++i) out[i - 1] = f[i] * Rational(static_cast<long>(i));
  return out;
}

// n! f[n]: the coefficient of t^n/n!.
template <CoefficientRing R>
R egf_coeff(const TruncSeries<R>& f, std::size_t n) {
  if (n > f.order())
    throw Error(ErrorKind::out_of_range,
                "coefficient " + std::to_string(n) + " beyond order " + std::to_string(f.order()));
  return f[n] * factorial(n);
}

template <CoefficientRing R>
std::vector<R> egf_coeffs(const TruncSeries<R>& f) {
  std::vector<R> out;
  out.reserve(f.order() + 1);
  Rational fact(1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    if (n > 0) fact *= Rational(static_cast<long>(n));
    out.push_back(f[n] * fact);
  }
  return out;
}

// Lift rational coefficients into another ring.
template <CoefficientRing R>
TruncSeries<R> promote(const TruncSeries<Rational>& f) {
  if constexpr (std::is_same_v<R, Rational>) {
    return f;
  } else {
    TruncSeries<R> out(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) out[i] = R(f[i]);
    return out;
  }
}

// Evaluate polynomial coefficients at x = x0.
inline TruncSeries<Rational> evaluate_at(const TruncSeries<Poly>& f, const Rational& x0) {
  TruncSeries<Rational> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) out[i] = f[i].eval(x0);
  return out;
}

}  // namespace polyfam
