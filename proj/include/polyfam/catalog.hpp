#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyfam/families.hpp"

// Tags, definitions and dispatch for every family the command line exposes.
namespace polyfam {

enum class FamilyTag {
  poly_bernoulli,
  poly_euler,
  hurwitz_pb,
  hurwitz_pe,
  imatomi_mpb,
  multi_poly_euler,
  multi_poly_bernoulli,
  hl_multi_pb,
  symmetrized_D,
  symmetrized_Dcal,
  ohno_sasaki_pe,
};

enum class IndexKind { single, multi, none };

struct FamilyInfo {
  FamilyTag tag;
  std::string_view name;
  std::string_view generating_function;
  std::string_view reference;
  IndexKind index;
  bool uses_params;  // alpha, beta, gamma
  bool uses_x;
  bool symbolic_x;   // x may be "sym"
  bool uses_a;
  bool bivariate;    // indexed by (n, m)
};

inline const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog{
      {FamilyTag::poly_bernoulli, "poly-bernoulli", "Li_k(1-e^{-t})/(1-e^{-t})", "Sec. 1 (Kaneko)",
       IndexKind::single, false, false, false, false, false},
      {FamilyTag::poly_euler, "poly-euler", "2 Li_k(1-e^{-t}) e^{xt}/(1+e^t)", "Eq. (1.1)", IndexKind::single, false,
       true, true, false, false},
      {FamilyTag::hurwitz_pb, "hurwitz-pb", "Phi(1-e^{-t}, k, a)", "Eq. (1.2)", IndexKind::single, false, false,
       false, true, false},
      {FamilyTag::hurwitz_pe, "hurwitz-pe", "2 (1-e^{-t}) Phi(1-e^{-t}, k, a)/(1+e^t)", "Eq. (1.6)",
       IndexKind::single, false, false, false, true, false},
      {FamilyTag::imatomi_mpb, "imatomi-mpb", "Li_{k1..kr}(1-e^{-t})/(1-e^{-t})", "Eq. (1.8)", IndexKind::multi,
       false, false, false, false, false},
      {FamilyTag::multi_poly_euler, "multi-poly-euler",
       "2 Li_{k1..kr}(1-(ab)^{-t}) c^{rxt}/(a^{-t}+b^t)^r", "Eq. (1.11)", IndexKind::multi, true, true, true, false,
       false},
      {FamilyTag::multi_poly_bernoulli, "multi-poly-bernoulli",
       "Li_{k1..kr}(1-(ab)^{-t}) c^{rxt}/(b^t-a^{-t})^r", "Eq. (4.1)", IndexKind::multi, true, true, true, false,
       false},
      {FamilyTag::hl_multi_pb, "hl-multi-pb", "Phi_{k1..kr}(1-e^{-t}, a) e^{rxt}", "Eq. (5.4)", IndexKind::multi,
       false, true, true, true, false},
      {FamilyTag::symmetrized_D, "symmetrized-D",
       "lambda^{-n} sum_j C(m,j) E_n^{(-j)}(x;a,b,c) ((y ln c + ln a)/lambda)^{m-j}", "Sec. 3", IndexKind::none,
       true, true, false, false, true},
      {FamilyTag::symmetrized_Dcal, "symmetrized-Dcal",
       "lambda^{-n} sum_{j1+..+jr=m} C(m; j) E_n^{(-j1..-j_{r-1})}(x;a,b,c) (((r-1) y ln c + ln a)/lambda)^{jr}",
       "Def. 3.1", IndexKind::none, true, true, false, false, true},
      {FamilyTag::ohno_sasaki_pe, "ohno-sasaki-pe", "Li_k(1-e^{-4t})/(4t cosh t)", "Sec. 1 (Ohno-Sasaki)",
       IndexKind::single, false, false, false, false, false},
  };
  return catalog;
}

inline const FamilyInfo& family_info(FamilyTag tag) {
  for (const auto& f : family_catalog())
    if (f.tag == tag) return f;
  throw Error(ErrorKind::usage, "family tag missing from catalog");
}

inline std::optional<FamilyTag> find_family(std::string_view name) {
  for (const auto& f : family_catalog())
    if (f.name == name) return f.tag;
  return std::nullopt;
}

// Symbolic x is represented by std::monostate.
using XArgument = std::variant<std::monostate, Rational>;

struct FamilySpec {
  FamilyTag tag = FamilyTag::poly_bernoulli;
  std::optional<MultiIndex> k;
  ParamTriple params{Rational(1), Rational(0), Rational(1)};
  XArgument x = Rational(0);
  Rational y;
  Rational a{1};
  std::size_t n_max = 8;
  std::size_t m_max = 0;  // bivariate families
  std::size_t r = 2;      // depth of symmetrized-Dcal

  bool symbolic() const { return std::holds_alternative<std::monostate>(x); }
  Rational x_value() const { return symbolic() ? Rational() : std::get<Rational>(x); }
};

namespace detail {

// Some denominator (m + shift)^{k} with k > 0 vanishes for an integer m >= 0.
inline bool shifted_pole(const Rational& shift, long k) {
  return k > 0 && shift.is_integer() && shift.sign() <= 0;
}

}  // namespace detail

// Checks every precondition so that computing never fails half way.
inline void validate(const FamilySpec& spec) {
  const auto& info = family_info(spec.tag);
  if (info.index != IndexKind::none && !spec.k) throw Error(ErrorKind::usage, std::string(info.name) + " needs --k");
  if (info.index == IndexKind::single && spec.k->depth() != 1)
    throw Error(ErrorKind::usage, std::string(info.name) + " takes a single integer k");
  if (spec.symbolic() && !info.symbolic_x)
    throw Error(ErrorKind::usage, std::string(info.name) + " does not accept symbolic x");
  if (info.uses_params && spec.params.log_ab().is_zero() &&
      (spec.tag == FamilyTag::multi_poly_bernoulli || info.bivariate))
    throw Error(ErrorKind::parameter, "ln a + ln b must be nonzero for " + std::string(info.name));
  if (spec.tag == FamilyTag::symmetrized_Dcal && spec.r < 2)
    throw Error(ErrorKind::parameter, "symmetrized-Dcal needs depth r >= 2 (r = 1 is symmetrized-D)");
  if (info.uses_a) {
    const long r = static_cast<long>(spec.k->depth());
    for (long i = 1; i <= r; ++i)
      if (detail::shifted_pole(spec.a - Rational(r) + Rational(i), (*spec.k)[static_cast<std::size_t>(i - 1)]))
        throw Error(ErrorKind::pole, "a = " + spec.a.to_string() + " puts a pole in the Hurwitz-Lerch series");
  }
}

struct ValueTable {
  FamilySpec spec;
  // one value per n, one polynomial per n (symbolic x), or [n][m]
  std::variant<std::vector<Rational>, std::vector<Poly>, std::vector<std::vector<Rational>>> values;
};

inline ValueTable compute(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.n_max;
  const Rational x = spec.x_value();
  auto with_x = [&](auto rational_fn, auto poly_fn) -> ValueTable {
    if (spec.symbolic()) return {spec, poly_fn()};
    return {spec, rational_fn()};
  };
  switch (spec.tag) {
    case FamilyTag::poly_bernoulli:
      return {spec, poly_bernoulli((*spec.k)[0], n)};
    case FamilyTag::poly_euler:
      return with_x([&] { return poly_euler_poly<Rational>((*spec.k)[0], x, n); },
                    [&] { return poly_euler_poly<Poly>((*spec.k)[0], Poly::x(), n); });
    case FamilyTag::hurwitz_pb:
      return {spec, hurwitz_poly_bernoulli((*spec.k)[0], spec.a, n)};
    case FamilyTag::hurwitz_pe:
      return {spec, hurwitz_poly_euler((*spec.k)[0], spec.a, n)};
    case FamilyTag::imatomi_mpb:
      return {spec, imatomi_mpb(*spec.k, n)};
    case FamilyTag::multi_poly_euler:
      return with_x([&] { return multi_poly_euler<Rational>(*spec.k, x, spec.params, n); },
                    [&] { return multi_poly_euler<Poly>(*spec.k, Poly::x(), spec.params, n); });
    case FamilyTag::multi_poly_bernoulli:
      return with_x([&] { return multi_poly_bernoulli<Rational>(*spec.k, x, spec.params, n); },
                    [&] { return multi_poly_bernoulli<Poly>(*spec.k, Poly::x(), spec.params, n); });
    case FamilyTag::hl_multi_pb:
      return with_x([&] { return hl_multi_pb_poly<Rational>(*spec.k, spec.a, x, n); },
                    [&] { return hl_multi_pb_poly<Poly>(*spec.k, spec.a, Poly::x(), n); });
    case FamilyTag::symmetrized_D:
      return {spec, symmetrized_D_table(n, spec.m_max, x, spec.y, spec.params)};
    case FamilyTag::symmetrized_Dcal:
      return {spec, symmetrized_Dcal_table(spec.r, n, spec.m_max, x, spec.y, spec.params,
                                           SymmetrizationConvention::literal)};
    case FamilyTag::ohno_sasaki_pe:
      return {spec, ohno_sasaki_poly_euler((*spec.k)[0], n)};
  }
  throw Error(ErrorKind::usage, "unhandled family");
}

}  // namespace polyfam
