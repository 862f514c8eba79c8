#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfam {

enum class ErrorKind {
  division_by_zero,
  invalid_rational,
  usage,            // order mismatch, bad depth, malformed arguments
  singular_series,  // constant term not invertible
  not_divisible,    // shift by t^k over a nonzero low-order coefficient
  out_of_range,
  parameter,        // e.g. beta = 0 for (r,beta)-Stirling numbers, lambda = 1
  pole,             // zero denominator in a Hurwitz-Lerch type sum
  degenerate,       // ln a + ln b = 0 where the formula divides by it
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::invalid_rational: return "invalid rational";
    case ErrorKind::usage: return "usage error";
    case ErrorKind::singular_series: return "singular series";
    case ErrorKind::not_divisible: return "not divisible";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::parameter: return "parameter error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::degenerate: return "degenerate parameters";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyfam
