#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polyfam/series.hpp"

namespace polyfam {

// Ordered index (k_1, ..., k_r) of a multiple polylogarithm; entries may be
// negative, depth is at least one.
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::usage, "multi-index must have depth >= 1");
  }

  // "k1,k2,...,kr"
  static MultiIndex parse(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(std::string(item), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw Error(ErrorKind::usage, "bad index list '" + std::string(text) + "'");
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return MultiIndex(std::move(out));
  }

  std::size_t depth() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  int back() const { return entries_.back(); }
  const std::vector<int>& entries() const { return entries_; }

  // Same index with the last entry changed by delta.
  MultiIndex with_last_shifted(int delta) const {
    auto e = entries_;
    e.back() += delta;
    return MultiIndex(std::move(e));
  }
  MultiIndex with_first_shifted(int delta) const {
    auto e = entries_;
    e.front() += delta;
    return MultiIndex(std::move(e));
  }
  MultiIndex without_last() const {
    if (entries_.size() < 2) throw Error(ErrorKind::usage, "cannot drop the only index entry");
    return MultiIndex(std::vector<int>(entries_.begin(), entries_.end() - 1));
  }
  MultiIndex reversed() const { return MultiIndex(std::vector<int>(entries_.rbegin(), entries_.rend())); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

// (alpha, beta, gamma) = (ln a, ln b, ln c) as exact rationals.
struct ParamTriple {
  Rational alpha;
  Rational beta;
  Rational gamma;

  Rational log_ab() const { return alpha + beta; }

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

// base^{-k} with the conventions 0^0 = 1 and 0^p = 0 for p > 0; a genuine
// pole (zero base, k > 0) raises ErrorKind::pole.
inline Rational inverse_power(const Rational& base, long k) {
  if (base.is_zero()) {
    if (k > 0) throw Error(ErrorKind::pole, "zero denominator raised to power " + std::to_string(k));
    return k == 0 ? Rational(1) : Rational(0);
  }
  return pow(base, -k);
}

// Li_{(k_1..k_r)}(z) = sum_{0<m_1<...<m_r} z^{m_r} / (m_1^{k_1} ... m_r^{k_r}),
// truncated at z^N. Depth-wise prefix sums: level i holds the weight of strict
// chains ending at m with the first i entries.
inline TruncSeries<Rational> multi_polylog_z(const MultiIndex& k, std::size_t order) {
  std::vector<Rational> level(order + 1);
  for (std::size_t m = 1; m <= order; ++m) level[m] = inverse_power(Rational(static_cast<long>(m)), k[0]);
  for (std::size_t i = 1; i < k.depth(); ++i) {
    std::vector<Rational> next(order + 1);
    Rational prefix;  // sum of level[m'] for m' < m
    for (std::size_t m = 1; m <= order; ++m) {
      prefix += level[m - 1];
      if (!prefix.is_zero()) next[m] = prefix * inverse_power(Rational(static_cast<long>(m)), k[i]);
    }
    level = std::move(next);
  }
  return TruncSeries<Rational>(std::move(level));
}

// 1 - e^{-lambda t}
inline TruncSeries<Rational> one_minus_exp_neg(const Rational& lambda, std::size_t order) {
  auto w = -exp_linear(-lambda, order);
  w[0] += Rational(1);
  return w;
}

// Li_{k}(1 - e^{-lambda t}) as a series in t.
inline TruncSeries<Rational> multi_polylog_t(const MultiIndex& k, const Rational& lambda, std::size_t order) {
  return compose(multi_polylog_z(k, order), one_minus_exp_neg(lambda, order));
}

// Phi(z, kk, a) = sum_{n>=0} z^n / (n + a)^kk.
inline TruncSeries<Rational> hurwitz_lerch_phi(long kk, const Rational& a, std::size_t order) {
  TruncSeries<Rational> s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = inverse_power(Rational(static_cast<long>(n)) + a, kk);
  return s;
}

// Phi_{(k_1..k_r)}(z, a) = sum_{0<=m_1<=...<=m_r} z^{m_r} / prod (m_i + a - r + i)^{k_i},
// by running sums over weakly increasing chains.
inline TruncSeries<Rational> hl_multi_phi(const MultiIndex& k, const Rational& a, std::size_t order) {
  const long r = static_cast<long>(k.depth());
  auto shift = [&](long i) { return a - Rational(r) + Rational(i); };  // i is 1-based
  std::vector<Rational> level(order + 1);
  for (std::size_t m = 0; m <= order; ++m) level[m] = inverse_power(Rational(static_cast<long>(m)) + shift(1), k[0]);
  for (long i = 2; i <= r; ++i) {
    std::vector<Rational> next(order + 1);
    Rational running;  // sum of level[m'] for m' <= m
    for (std::size_t m = 0; m <= order; ++m) {
      running += level[m];
      next[m] = running * inverse_power(Rational(static_cast<long>(m)) + shift(i), k[i - 1]);
    }
    level = std::move(next);
  }
  return TruncSeries<Rational>(std::move(level));
}

struct DerivativeCheck {
  bool pass = true;
  std::size_t first_mismatch = 0;  // coefficient of z^n, valid when !pass
  Rational lhs, rhs;
};

// d/dz Li_k(z) against (1/z) Li_{k_1..k_r - 1}(z) when k_r != 1, and against
// (1/(1-z)) Li_{k_1..k_{r-1}}(z) when k_r = 1 (1/(1-z) itself at depth one).
// Compared coefficient-wise up to z^{N-1}.
inline DerivativeCheck polylog_derivative_check(const MultiIndex& k, std::size_t order) {
  if (order == 0) return {};
  const auto lhs = derivative(multi_polylog_z(k, order));
  TruncSeries<Rational> rhs(order - 1);
  if (k.back() != 1) {
    rhs = shift_div_t(multi_polylog_z(k.with_last_shifted(-1), order), 1);
  } else {
    TruncSeries<Rational> geometric(order - 1);
    for (std::size_t i = 0; i < order; ++i) geometric[i] = Rational(1);
    rhs = k.depth() == 1 ? geometric : multi_polylog_z(k.without_last(), order - 1) * geometric;
  }
  for (std::size_t n = 0; n < order; ++n)
    if (lhs[n] != rhs[n]) return {false, n, lhs[n], rhs[n]};
  return {};
}

}  // namespace polyfam
