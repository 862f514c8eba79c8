#include <random>

#include <gtest/gtest.h>

#include "polyfam/poly.hpp"
#include "polyfam/rational.hpp"

using polyfam::Error;
using polyfam::ErrorKind;
using polyfam::Poly;
using polyfam::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = random_rational(rng);
  return Poly(c);
}

}  // namespace

TEST(Rational, Examples) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(q("7/3") * q("3/7"), Rational(1));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(q("-3/4").to_string(), "-3/4");
  EXPECT_EQ(q("5/1").to_string(), "5");
  EXPECT_EQ(q("5"), Rational(5));
  EXPECT_EQ(q(" +6/4 "), q("3/2"));
  EXPECT_EQ(q("-0/7"), Rational(0));
  EXPECT_EQ(Rational(3, -6), q("-1/2"));
  for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/-2", "--1", "1 /2", "2/0"}) {
    try {
      (void)q(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_rational) << bad;
    }
  }
}

TEST(Rational, DivisionByZero) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
  }
  EXPECT_THROW(polyfam::pow(Rational(0), -1), Error);
}

TEST(Rational, PowFactorialBinomial) {
  EXPECT_EQ(polyfam::pow(q("-2/3"), 3), q("-8/27"));
  EXPECT_EQ(polyfam::pow(q("-2/3"), -2), q("9/4"));
  EXPECT_EQ(polyfam::pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(polyfam::factorial(0), Rational(1));
  EXPECT_EQ(polyfam::factorial(10), Rational(3628800));
  EXPECT_EQ(polyfam::binomial(10, 3), Rational(120));
  EXPECT_EQ(polyfam::binomial(5, 7), Rational(0));
  EXPECT_EQ(polyfam::binomial(5, -1), Rational(0));
  // beyond the cached Pascal rows
  EXPECT_EQ(polyfam::binomial(70, 2), Rational(2415));
  EXPECT_EQ(polyfam::binomial(66, 33), polyfam::binomial(65, 32) + polyfam::binomial(65, 33));
}

TEST(Rational, FieldAxioms) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    }
    // canonical form after every operation
    const Rational s = a * b + c;
    EXPECT_EQ(s, Rational::parse(s.to_string()));
  }
}

TEST(Poly, Eval) {
  EXPECT_EQ((Poly{1, 0, 1}).eval(2), Rational(5));
  EXPECT_EQ(Poly().eval(q("7/3")), Rational(0));
  EXPECT_EQ((Poly{q("-1/2"), 3}).eval(q("1/3")), q("1/2"));
}

TEST(Poly, ArithmeticAndDerivative) {
  EXPECT_EQ((Poly{1, 1}) * (Poly{-1, 1}), (Poly{-1, 0, 1}));
  EXPECT_EQ((Poly{0, 0, 0, 1}).derivative(), (Poly{0, 0, 3}));
  EXPECT_EQ(Poly(5).derivative(), Poly());
  EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
  EXPECT_EQ((Poly{1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(((Poly{1, 1}) - (Poly{1, 1})).is_zero());
  EXPECT_EQ(polyfam::pow(Poly{1, 1}, 3), (Poly{1, 3, 3, 1}));
}

TEST(Poly, RingAxiomsAndEvaluationHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
    const Rational x0 = random_rational(rng);
    EXPECT_EQ(p * r, r * p);
    EXPECT_EQ(p * (r + s), p * r + p * s);
    EXPECT_EQ((p * r) * s, p * (r * s));
    EXPECT_EQ((p * r).eval(x0), p.eval(x0) * r.eval(x0));
    EXPECT_EQ((p + r).eval(x0), p.eval(x0) + r.eval(x0));
    // product rule
    EXPECT_EQ((p * r).derivative(), p.derivative() * r + p * r.derivative());
    if (!p.is_zero() && !r.is_zero()) {
      EXPECT_EQ((p * r).degree(), p.degree() + r.degree());
    }
  }
}
