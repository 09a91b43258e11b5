#include "zws/zeta_w.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "zws/quadrature.hpp"
#include "zws/special_functions.hpp"
#include "zws/summation.hpp"

namespace zws {
namespace {

ComplexValue expm1(ComplexValue z) {
  const double x = z.real();
  const double y = z.imag();
  const double half_sin = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

}  // namespace

double sawtooth_w(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("sawtooth_w requires 0 < x <= 1, got " + std::to_string(x));
  }
  const double k = std::floor(1.0 / x);
  return k * (x * k + x - 1.0);
}

double log_deficit(std::int64_t n) {
  if (n < 8) {
    const double nd = static_cast<double>(n);
    return 1.0 - nd * std::log1p(1.0 / nd);
  }
  // x/2 - x^2/3 + x^3/4 - ..., x = 1/n
  const double x = 1.0 / static_cast<double>(n);
  double power = x;
  double sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    const double term = power / (k + 1);
    sum += (k % 2 == 1) ? term : -term;
    if (term <= 1e-18 * sum) break;
    power *= x;
  }
  return sum;
}

ComplexValue exp_minus_one_minus_z(ComplexValue z) {
  if (std::abs(z) >= 0.5) return expm1(z) - z;
  ComplexValue power = 0.5 * z * z;
  ComplexValue sum = 0.0;
  for (int k = 2; k < 40; ++k) {
    sum += power;
    if (std::abs(power) <= 1e-18 * std::abs(sum)) break;
    power *= z / static_cast<double>(k + 1);
  }
  return sum;
}

ComplexValue truncated_sum(TruncationIndex n, ComplexValue s) {
  // Each summand is regrouped as
  //   n^-s [ s (1 - n L) + n (e^(-s L) - 1 + s L) ],  L = ln(1 + 1/n),
  // which is exactly zero at s = 0 and keeps full relative accuracy near it.
  NeumaierSum<ComplexValue> sum;
  const std::int64_t count = n.value();
  for (std::int64_t k = 1; k <= count; ++k) {
    const double kd = static_cast<double>(k);
    const double log_step = std::log1p(1.0 / kd);
    const ComplexValue inner = s * log_deficit(k) + kd * exp_minus_one_minus_z(-s * log_step);
    sum.add(std::exp(-s * std::log(kd)) * inner);
  }
  return sum.value();
}

EvalResult zeta_w(TruncationIndex n, ComplexValue s) {
  if (s == ComplexValue{1.0, 0.0}) return EvalResult::at_pole();
  return {truncated_sum(n, s) / (s - 1.0), false};
}

double zeta_w_closed_integer(TruncationIndex n, int order) {
  if (order < 2) {
    throw DomainError("zeta_w_closed_integer requires n >= 2, got " + std::to_string(order));
  }
  const double big_n = n.as_double();
  const double k = static_cast<double>(order);
  double factorial = 1.0;  // Gamma(n) = (n-1)!
  for (int i = 2; i < order; ++i) factorial *= i;
  const double cos_term = (order % 2 == 0) ? 1.0 : -1.0;

  NeumaierSum<double> sum;
  sum.add(big_n / ((k - 1.0) * std::pow(big_n + 1.0, k)));
  sum.add(-cos_term * polygamma_int(order - 1, big_n + 1.0) / factorial);
  sum.add(zeta_reference(ComplexValue{k, 0.0}).value.real());
  return sum.value();
}

ComplexValue mellin_branch_integral(std::int64_t n, ComplexValue s) {
  if (n < 1) throw DomainError("mellin_branch_integral requires n >= 1");
  if (!(s.real() > 0.0)) throw DomainError("mellin quadrature requires Re s > 0");
  const double nd = static_cast<double>(n);
  auto integrand = [nd, s](double x) -> ComplexValue {
    return nd * (x * nd + x - 1.0) * std::exp((s - 1.0) * std::log(x));
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-13;
  const auto result = integrate_adaptive<ComplexValue>(integrand, 1.0 / (nd + 1.0), 1.0 / nd, opts);
  if (!result.converged) {
    throw QuadratureError("mellin branch " + std::to_string(n) + " did not converge");
  }
  return result.value;
}

EvalResult mellin_integrand_quadrature(TruncationIndex n, ComplexValue s) {
  if (!(s.real() > 0.0)) throw DomainError("mellin quadrature requires Re s > 0");
  if (s == ComplexValue{1.0, 0.0}) return EvalResult::at_pole();
  NeumaierSum<ComplexValue> sum;
  for (std::int64_t k = 1; k <= n.value(); ++k) sum.add(mellin_branch_integral(k, s));
  return {s * (s + 1.0) / (s - 1.0) * sum.value(), false};
}

}  // namespace zws
