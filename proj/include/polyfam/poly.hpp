#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "polyfam/rational.hpp"

namespace polyfam {

// Dense univariate polynomial over the rationals. Coefficients are stored by
// ascending degree with no trailing zeros, so the zero polynomial has an
// empty coefficient list.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }  // NOLINT
  Poly(long c) : Poly(Rational(c)) {}                                    // NOLINT
  Poly(int c) : Poly(Rational(c)) {}                                     // NOLINT
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly zero() { return {}; }
  static Poly one() { return Poly(Rational(1)); }
  static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static Poly monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& x0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator/(Poly a, const Rational& c) {
    if (c.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial divided by zero");
    for (auto& v : a.coeffs_) v /= c;
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Ascending coefficient list, e.g. "[-1/2, 3]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].to_string();
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Poly pow(const Poly& base, unsigned long exponent) {
  Poly result = Poly::one();
  Poly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace polyfam
