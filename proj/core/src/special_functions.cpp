#include "zws/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zws/config.hpp"
#include "zws/summation.hpp"

namespace zws {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi) / 2

// B_0 .. B_60 as doubles, shared by all asymptotic series below.
const std::vector<double>& bernoulli_doubles() {
  static const std::vector<double> table = [] {
    const auto exact = bernoulli_numbers(60);
    std::vector<double> out;
    out.reserve(exact.size());
    for (const auto& b : exact) out.push_back(b.to_double());
    return out;
  }();
  return table;
}

void require_finite_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " requires a finite x > 0, got " + std::to_string(x));
  }
}

// Stirling series for ln Gamma(z), valid for |z| >= 15 off the negative axis.
template <typename T>
T stirling_log_gamma(T z) {
  const auto& b = bernoulli_doubles();
  T result = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
  const T inv_z2 = 1.0 / (z * z);
  T power = 1.0 / z;
  for (int k = 1; k <= 12; ++k) {
    const T term = b[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    result += term;
    if (std::abs(term) <= 1e-17 * std::abs(result)) break;
    power *= inv_z2;
  }
  return result;
}

ComplexValue sin_pi_complex(ComplexValue z) {
  const double x = z.real();
  const double y = z.imag();
  return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

// Euler-Maclaurin evaluation of zeta(s); accurate for Re s >= 0, s != 1.
ComplexValue zeta_euler_maclaurin(ComplexValue s) {
  const auto& b = bernoulli_doubles();
  const int m = 20 + static_cast<int>(std::ceil(std::abs(s)));
  NeumaierSum<ComplexValue> sum;
  for (int n = 1; n < m; ++n) sum.add(std::exp(-s * std::log(static_cast<double>(n))));

  const double log_m = std::log(static_cast<double>(m));
  const ComplexValue m_pow = std::exp(-s * log_m);  // M^-s
  sum.add(m_pow * static_cast<double>(m) / (s - 1.0));
  sum.add(0.5 * m_pow);

  // B_2k / (2k)! * s(s+1)...(s+2k-2) * M^(-s-2k+1)
  ComplexValue rising = s;
  double factorial = 2.0;
  double m_power = 1.0 / m;
  for (int k = 1; k <= 30; ++k) {
    const ComplexValue term = b[2 * k] / factorial * rising * m_pow * m_power;
    sum.add(term);
    if (std::abs(term) <= 1e-17 * std::abs(sum.value())) break;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    m_power /= static_cast<double>(m) * m;
  }
  return sum.value();
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = x - 2.0 * std::nearbyint(0.5 * x);  // exact, r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::abs(x - 2.0 * std::nearbyint(0.5 * x));  // r in [0, 1]
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -cos_pi(1.0 - r);
  if (r > 0.25) return std::sin(kPi * (0.5 - r));
  return std::cos(kPi * r);
}

double log_gamma(double x) {
  require_finite_positive(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  double shifted = x;
  double product = 1.0;
  while (shifted < 15.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return stirling_log_gamma(shifted) - std::log(product);
}

ComplexValue gamma(ComplexValue z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real())) {
    throw DomainError("gamma has a pole at the non-positive integer " +
                      std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return kPi / (sin_pi_complex(z) * gamma(1.0 - z));
  }
  ComplexValue shifted = z;
  ComplexValue product = 1.0;
  while (std::abs(shifted) < 15.0 || shifted.real() < 15.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return std::exp(stirling_log_gamma(shifted)) / product;
}

double digamma(double x) {
  require_finite_positive(x, "digamma");
  const auto& b = bernoulli_doubles();
  NeumaierSum<double> shift;
  while (x < 10.0) {
    shift.add(1.0 / x);
    x += 1.0;
  }
  const double inv_x2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv_x2;
  for (int k = 1; k <= 10; ++k) {
    series += b[2 * k] / (2.0 * k) * power;
    power *= inv_x2;
  }
  return std::log(x) - 0.5 / x - series - shift.value();
}

double trigamma_tail(std::int64_t n) {
  if (n < 1) throw DomainError("trigamma_tail requires N >= 1");
  if (n < 20) {
    NeumaierSum<double> sum;
    sum.add(kPi * kPi / 6.0);
    for (std::int64_t k = 1; k <= n; ++k) {
      const double kd = static_cast<double>(k);
      sum.add(-1.0 / (kd * kd));
    }
    return sum.value();
  }
  // Euler-Maclaurin tail: sum_{k>=M} k^-2 = 1/M + 1/(2M^2) + sum_j B_2j / M^(2j+1).
  const auto& b = bernoulli_doubles();
  const double m = static_cast<double>(n + 1);
  const double inv_m2 = 1.0 / (m * m);
  double correction = 0.0;
  double power = inv_m2 / m;
  for (int j = 1; j <= 8; ++j) {
    correction += b[2 * j] * power;
    power *= inv_m2;
  }
  return 1.0 / m + 0.5 * inv_m2 + correction;
}

double polygamma_int(int m, double x) {
  if (m < 1) throw DomainError("polygamma_int requires order m >= 1");
  require_finite_positive(x, "polygamma_int");
  const auto& b = bernoulli_doubles();
  const double order = static_cast<double>(m);

  // S(x) = sum_{k>=0} (x+k)^-(m+1); Psi(m, x) = (-1)^(m+1) m! S(x).
  NeumaierSum<double> sum;
  const double threshold = 2.0 * order + 20.0;
  while (x < threshold) {
    sum.add(std::pow(x, -order - 1.0));
    x += 1.0;
  }
  const double inv_x2 = 1.0 / (x * x);
  const double lead = std::pow(x, -order);
  NeumaierSum<double> tail;
  tail.add(lead / order);
  tail.add(0.5 * lead / x);
  // c_k = B_2k (2k+m-1)! / ((2k)! m!), built incrementally from c_1 = (m+1)/2.
  double coeff = 0.5 * (order + 1.0);
  double power = lead * inv_x2;  // x^-(m+2)
  for (int k = 1; k < 30; ++k) {
    const double term = b[2 * k] * coeff * power;
    tail.add(term);
    if (std::abs(term) <= 1e-17 * tail.value()) break;
    const double twok = 2.0 * k;
    coeff *= (order + twok) * (order + twok + 1.0) / ((twok + 1.0) * (twok + 2.0));
    power *= inv_x2;
  }
  sum.add(tail.value());

  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * sum.value();
}

double log_integral(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw DomainError("log_integral requires x > 1, got " + std::to_string(x));
  }
  const double l = std::log(x);
  NeumaierSum<double> sum;
  sum.add(kEulerGamma);
  sum.add(std::log(l));
  double power = 1.0;  // l^k / k!
  for (int k = 1; k < 2000; ++k) {
    power *= l / k;
    const double term = power / k;
    sum.add(term);
    if (term <= 1e-17 * std::abs(sum.value())) break;
  }
  return sum.value();
}

EvalResult exp_integral_e1(ComplexValue t) {
  if (t == ComplexValue{}) return EvalResult::at_pole();
  if (t.imag() == 0.0 && t.real() < 0.0) {
    throw DomainError("exp_integral_e1 is undefined on the branch cut (negative real axis)");
  }
  if (std::abs(t) <= config::kE1SeriesRadius) {
    // E1(t) = -gamma - ln t - sum_{k>=1} (-t)^k / (k k!)
    NeumaierSum<ComplexValue> sum;
    ComplexValue power = 1.0;
    for (int k = 1; k < 200; ++k) {
      power *= -t / static_cast<double>(k);
      const ComplexValue term = power / static_cast<double>(k);
      sum.add(term);
      if (std::abs(term) <= 1e-17 * std::abs(sum.value())) break;
    }
    return {-kEulerGamma - std::log(t) - sum.value(), false};
  }
  // Modified Lentz on E1(t) = e^-t / (t + 1 - 1/(t + 3 - 4/(t + 5 - ...))).
  constexpr double kTiny = 1e-300;
  ComplexValue b = t + 1.0;
  ComplexValue c = 1.0 / kTiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const ComplexValue delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= 1e-16) break;
  }
  return {h * std::exp(-t), false};
}

std::vector<Rational> bernoulli_numbers(int max) {
  if (max < 0) throw DomainError("bernoulli_numbers requires max >= 0");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(max) + 1);
  b.emplace_back(1);
  for (int m = 1; m <= max; ++m) {
    if (m >= 3 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational acc;
    for (int j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      acc += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * b[j];
    }
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

EvalResult zeta_reference(ComplexValue s) {
  if (s == ComplexValue{1.0, 0.0}) return EvalResult::at_pole();
  if (s.real() >= 0.0) return {zeta_euler_maclaurin(s), false};
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
  const ComplexValue one_minus_s = 1.0 - s;
  const ComplexValue factor = std::exp(s * std::numbers::ln2 + (s - 1.0) * std::log(kPi));
  return {factor * sin_pi_complex(0.5 * s) * gamma(one_minus_s) * zeta_euler_maclaurin(one_minus_s),
          false};
}

}  // namespace zws
