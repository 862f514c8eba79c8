#include <random>

#include <gtest/gtest.h>

#include "polyfam/bi_series.hpp"
#include "polyfam/series.hpp"

using namespace polyfam;

namespace {

using S = TruncSeries<Rational>;

S series(std::vector<Rational> c) { return S(std::move(c)); }

S random_series(std::mt19937_64& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  S s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(num(rng), den(rng));
  if (unit && s[0].is_zero()) s[0] = Rational(1);
  return s;
}

S exp_series(std::size_t order) { return exp_linear(Rational(1), order); }

}  // namespace

TEST(Series, Multiply) {
  EXPECT_EQ(series({1, 1, 0}) * series({1, -1, 0}), series({1, 0, -1}));
  const S f = series({3, Rational(1, 2), -2, 7});
  EXPECT_EQ(f * S::one(3), f);
  EXPECT_EQ(exp_linear(Rational(1), 6) * exp_linear(Rational(-1), 6), S::one(6));
}

TEST(Series, OrderMismatchIsAnError) {
  try {
    (void)(S::one(2) * S::one(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::usage);
  }
}

TEST(Series, Inverse) {
  EXPECT_EQ(inverse(series({1, -1, 0, 0})), series({1, 1, 1, 1}));
  EXPECT_EQ(inverse(S::one(4)), S::one(4));
  EXPECT_EQ(inverse(series({2, 1, 0})), series({Rational(1, 2), Rational(-1, 4), Rational(1, 8)}));
  try {
    (void)inverse(series({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::singular_series);
  }
}

TEST(Series, Compose) {
  const S geometric = series({1, 1, 1, 1});
  EXPECT_EQ(compose(geometric, series({0, 1, 0, 0})), geometric);
  EXPECT_EQ(compose(series({0, 0, 1, 0}), series({0, 1, 1, 0})), series({0, 0, 1, 2}));
  EXPECT_THROW(compose(geometric, series({1, 1, 0, 0})), Error);
}

TEST(Series, BellNumbers) {
  const std::size_t n = 12;
  auto inner = exp_series(n);
  inner[0] = Rational(0);
  const auto bell = egf_coeffs(compose(exp_series(n), inner));
  // B_{n+1} = sum_k C(n,k) B_k
  std::vector<Rational> expect{1};
  for (std::size_t m = 0; m < n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= m; ++k) acc += binomial(static_cast<long>(m), static_cast<long>(k)) * expect[k];
    expect.push_back(acc);
  }
  EXPECT_EQ(bell, expect);
  EXPECT_EQ(bell[5], Rational(52));
  EXPECT_EQ(bell[12], Rational(4213597));
}

TEST(Series, ExpLinear) {
  EXPECT_EQ(exp_linear(Rational(0), 5), S::one(5));
  EXPECT_EQ(exp_linear(Rational(1), 3), series({1, 1, Rational(1, 2), Rational(1, 6)}));
  const auto ex = exp_linear<Poly>(Poly::x(), 2);
  EXPECT_EQ(ex[0], Poly(1));
  EXPECT_EQ(ex[1], Poly::x());
  EXPECT_EQ(ex[2], (Poly{0, 0, Rational(1, 2)}));
}

TEST(Series, ShiftDivT) {
  EXPECT_EQ(shift_div_t(series({0, 1, 1}), 1), series({1, 1}));
  EXPECT_EQ(shift_div_t(series({0, 0, 1}), 2), series({1}));
  try {
    (void)shift_div_t(series({1, 1}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_divisible);
  }
}

TEST(Series, EgfCoeff) {
  const auto e = exp_series(7);
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(egf_coeff(e, n), Rational(1));
  EXPECT_EQ(egf_coeff(inverse(series({1, -1, 0, 0})), 3), Rational(6));
  EXPECT_EQ(egf_coeff(exp_linear(Rational(2), 4), 4), Rational(16));
  try {
    (void)egf_coeff(e, 8);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::out_of_range);
  }
}

TEST(Series, DerivativeAndShifts) {
  EXPECT_EQ(derivative(series({5, 1, 1, 1})), series({1, 2, 3}));
  EXPECT_EQ(shift_mul_t(series({1, 2, 3}), 1), series({0, 1, 2}));
  EXPECT_EQ(truncate(series({1, 2, 3}), 1), series({1, 2}));
  EXPECT_EQ(truncate(series({1, 2}), 3), series({1, 2, 0, 0}));
}

// (fg)_n = sum_k C(n,k) f_k g_{n-k} for EGF coefficients
TEST(SeriesProperty, BinomialConvolution) {
  std::mt19937_64 rng(3);
  const std::size_t n = 12;
  for (int trial = 0; trial < 20; ++trial) {
    const S f = random_series(rng, n, false), g = random_series(rng, n, false);
    const auto fg = egf_coeffs(f * g);
    const auto fe = egf_coeffs(f), ge = egf_coeffs(g);
    for (std::size_t m = 0; m <= n; ++m) {
      Rational acc;
      for (std::size_t k = 0; k <= m; ++k) acc += binomial(static_cast<long>(m), static_cast<long>(k)) * fe[k] * ge[m - k];
      EXPECT_EQ(fg[m], acc);
    }
  }
}

TEST(SeriesProperty, InverseAndComposeRoundTrips) {
  std::mt19937_64 rng(5);
  const std::size_t n = 12;
  for (int trial = 0; trial < 20; ++trial) {
    const S f = random_series(rng, n, true);
    EXPECT_EQ(f * inverse(f), S::one(n));
    EXPECT_EQ(inverse(inverse(f)), f);
    // log(1+u) composed with e^t - 1 is t
    S g = random_series(rng, n, false);
    g[0] = Rational(0);
    S log1p(n);
    for (std::size_t k = 1; k <= n; ++k) log1p[k] = Rational((k % 2) ? 1 : -1, static_cast<long>(k));
    auto expm1 = exp_series(n);
    expm1[0] = Rational(0);
    EXPECT_EQ(compose(log1p, compose(expm1, g)), g);
    // composition is a ring homomorphism in the outer argument
    const S h = random_series(rng, n, false);
    EXPECT_EQ(compose(f * h, g), compose(f, g) * compose(h, g));
  }
}

TEST(SeriesProperty, PolyCoefficientsEvaluate) {
  // e^{xt} e^{t} at x = x0 equals e^{(x0+1) t}
  const std::size_t n = 8;
  const auto sym = exp_linear<Poly>(Poly::x(), n) * promote<Poly>(exp_series(n));
  for (const Rational& x0 : {Rational(0), Rational(-1), Rational(1, 2), Rational(7, 3)})
    EXPECT_EQ(evaluate_at(sym, x0), exp_linear(x0 + Rational(1), n));
}

TEST(BiSeries, Basics) {
  const auto e = bi_exp_linear(Rational(1), Rational(1), 3, 3);
  EXPECT_EQ(egf_coeff(e, 1, 1), Rational(1));
  EXPECT_EQ(egf_coeff(e, 3, 2), Rational(1));
  const auto f = bi_exp_linear(Rational(2), Rational(-1), 4, 3);
  EXPECT_EQ(egf_coeff(f, 3, 2), Rational(8));
  EXPECT_EQ(f * bi_exp_linear(Rational(-2), Rational(1), 4, 3), (BiTruncSeries<Rational>::one(4, 3)));
  EXPECT_EQ(f * inverse(f), (BiTruncSeries<Rational>::one(4, 3)));
  EXPECT_THROW(egf_coeff(f, 5, 0), Error);
}

TEST(BiSeries, ProductOfUnivariates) {
  // e^{t} e^{u} built from univariate pieces
  const auto et = BiTruncSeries<Rational>::from_univariate(exp_series(4), 4, 4);
  const auto eu = BiTruncSeries<Rational>::from_univariate(exp_series(4), 4, 4, true);
  EXPECT_EQ(et * eu, bi_exp_linear(Rational(1), Rational(1), 4, 4));
  EXPECT_EQ(pow(et, 3), bi_exp_linear(Rational(3), Rational(0), 4, 4));
}
