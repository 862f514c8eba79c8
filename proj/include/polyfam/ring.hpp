#pragma once

#include <concepts>

#include "polyfam/poly.hpp"
#include "polyfam/rational.hpp"

namespace polyfam {

// Coefficient rings used by the series engine: the rationals and Q[x].
template <class R>
concept CoefficientRing = requires(R a, R b, Rational q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  R(q);
};

// Multiplicative inverse of a unit. In Q[x] the units are the nonzero constants.
inline Rational unit_inverse(const Rational& a) {
  if (a.is_zero()) throw Error(ErrorKind::singular_series, "zero constant term");
  return Rational(1) / a;
}

inline Poly unit_inverse(const Poly& a) {
  if (a.is_zero() || !a.is_constant())
    throw Error(ErrorKind::singular_series, "constant term " + a.to_string() + " is not a unit in Q[x]");
  return Poly(Rational(1) / a.constant_term());
}

// Value at x = x0: identity on rationals, evaluation on polynomials.
inline Rational evaluate_at(const Rational& a, const Rational&) { return a; }
inline Rational evaluate_at(const Poly& a, const Rational& x0) { return a.eval(x0); }

template <CoefficientRing R>
R ring_pow(const R& base, long exponent) {
  R result(Rational(1));
  R b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace polyfam
