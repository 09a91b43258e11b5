#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zws {

using ComplexValue = std::complex<double>;

/// Euler-Mascheroni constant to binary64 precision.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when adaptive quadrature cannot meet its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value that may instead be a pole. `value` is meaningless when `pole` is set.
struct EvalResult {
  ComplexValue value{};
  bool pole = false;

  static EvalResult at_pole() { return EvalResult{ComplexValue{}, true}; }
};

/// Truncation order N of the finite sum, 1 <= N <= 10^7.
class TruncationIndex {
 public:
  static constexpr std::int64_t kMax = 10'000'000;

  explicit TruncationIndex(std::int64_t n) : n_(n) {
    if (n < 1 || n > kMax) {
      throw DomainError("truncation index N must lie in [1, 1e7], got " +
                        std::to_string(n));
    }
  }

  std::int64_t value() const { return n_; }
  double as_double() const { return static_cast<double>(n_); }

  TruncationIndex next() const { return TruncationIndex(n_ + 1); }

  friend bool operator==(TruncationIndex, TruncationIndex) = default;

 private:
  std::int64_t n_;
};

}  // namespace zws
