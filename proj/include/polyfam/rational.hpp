#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyfam/error.hpp"

namespace polyfam {

using Integer = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const Integer& value) : value_(value) {}
  explicit Rational(mpq_class canonical) : value_(std::move(canonical)) {}  // must already be in lowest terms

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "p/q", "p", optional leading sign, surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw Error(ErrorKind::invalid_rational, "cannot parse '" + std::string(text) + "'");
    std::string num_str(num);
    if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
    Integer n(num_str, 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::invalid_rational, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p/q", or "p" when the denominator is one.
  std::string to_string() const { return value_.get_str(10); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "rational division");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

// Integer power; negative exponents invert. 0^0 is 1.
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::division_by_zero, "zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  // powers of coprime numerator and denominator stay coprime
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.raw().get_mpq_t()), static_cast<unsigned long>(exponent));
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.raw().get_mpq_t()), static_cast<unsigned long>(exponent));
  return Rational(out);
}

inline Rational factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0;
// zero for k < 0.
inline Rational binomial(long n, long k) {
  if (k < 0) return Rational();
  constexpr long kRows = 64;
  static const std::vector<std::vector<Rational>> pascal = [] {
    std::vector<std::vector<Rational>> rows(kRows + 1);
    for (long i = 0; i <= kRows; ++i) {
      rows[i].resize(static_cast<std::size_t>(i) + 1, Rational(1));
      for (long j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
    return rows;
  }();
  if (n >= 0 && n <= kRows) return k <= n ? pascal[n][k] : Rational();
  Integer b;
  mpz_bin_ui(b.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Rational sign_power(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace polyfam
