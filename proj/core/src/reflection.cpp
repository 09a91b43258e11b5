#include "zws/reflection.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "zws/config.hpp"
#include "zws/special_functions.hpp"
#include "zws/summation.hpp"
#include "zws/zeta_w.hpp"

namespace zws {
namespace {

double chi_real(TruncationIndex n, double s) {
  const auto r = chi(n, ComplexValue{s, 0.0});
  if (r.pole) throw DomainError("chi sampled at a pole, s = " + std::to_string(s));
  return r.value.real();
}

// f'(x0) from central differences at +-h, +-2h with one Richardson step.
template <typename F>
double richardson_derivative(F&& f, double x0, double h) {
  const double d1 = (f(x0 + h) - f(x0 - h)) / (2.0 * h);
  const double d2 = (f(x0 + 2.0 * h) - f(x0 - 2.0 * h)) / (4.0 * h);
  return (4.0 * d1 - d2) / 3.0;
}

// f(x0) for a function with a removable singularity at x0.
template <typename F>
double richardson_midpoint(F&& f, double x0, double h) {
  const double a1 = 0.5 * (f(x0 + h) + f(x0 - h));
  const double a2 = 0.5 * (f(x0 + 2.0 * h) + f(x0 - 2.0 * h));
  return (4.0 * a1 - a2) / 3.0;
}

bool stabilizes(const std::array<double, 3>& p, double tol) {
  const double drift_late = std::abs(p[2] - p[1]) / std::abs(p[2]);
  const double drift_early = std::abs(p[1] - p[0]) / std::abs(p[1]);
  return std::isfinite(drift_late) && drift_late < tol && drift_late <= drift_early;
}

}  // namespace

EvalResult chi(TruncationIndex n, ComplexValue s) {
  if (s == ComplexValue{0.0, 0.0}) return EvalResult::at_pole();
  if (s == ComplexValue{1.0, 0.0}) return {ComplexValue{0.0, 0.0}, false};
  if (s == ComplexValue{0.5, 0.0}) return {ComplexValue{1.0, 0.0}, false};
  // -(s-1) S(N; 1-s) / (s S(N; s)), the prefactor-cancelled quotient.
  const ComplexValue denominator = s * truncated_sum(n, s);
  if (denominator == ComplexValue{}) return EvalResult::at_pole();
  return {-(s - 1.0) * truncated_sum(n, 1.0 - s) / denominator, false};
}

AbcSums abc_sums(TruncationIndex n) {
  NeumaierSum<double> a;
  NeumaierSum<double> b;
  NeumaierSum<double> c;
  NeumaierSum<double> deficit;
  double log_n = 0.0;
  for (std::int64_t k = 1; k <= n.value(); ++k) {
    const double kd = static_cast<double>(k);
    const double step = std::log1p(1.0 / kd);  // ln(k+1) - ln k
    const double log_next = std::log(kd + 1.0);
    a.add(kd * step);
    b.add((-kd * kd * step - log_n) / (kd * (kd + 1.0)));
    c.add(0.5 * kd * step * (log_next + log_n));
    deficit.add(log_deficit(k));
    log_n = log_next;
  }
  return {n.value(), a.value(), b.value(), c.value(), deficit.value()};
}

ResidueReport residue_chi_at_0(TruncationIndex n) {
  const AbcSums sums = abc_sums(n);
  const double big_n = n.as_double();
  NeumaierSum<double> numerator;
  numerator.add(1.0);
  numerator.add(kEulerGamma);
  numerator.add(digamma(big_n + 2.0));
  numerator.add(-2.0 / (big_n + 1.0));
  numerator.add(sums.b);
  numerator.add(-big_n * (log_gamma(big_n + 1.0) - sums.c) / (sums.deficit * (big_n + 1.0)));
  const double value = -numerator.value() / sums.deficit;  // a(N) - N = -deficit
  return {value, ResidueMethod::closed_form, std::abs(value - laurent_residue(n))};
}

double laurent_residue(TruncationIndex n) {
  auto f = [n](double s) { return s * s * chi_real(n, s); };
  return richardson_derivative(f, 0.0, config::kLaurentStep);
}

double residue_inv_chi_at_2(TruncationIndex n) {
  const double big_n = n.as_double();
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double numerator =
      2.0 * big_n / ((big_n + 1.0) * (big_n + 1.0)) - 2.0 * trigamma_tail(n.value()) + 2.0 * kZeta2;
  // (N+1)^2/2 - N/2 - 1/2 equals sum n, so the denominator is summed termwise as
  // sum n (1 - (n+1) ln(1 + 1/n)) to avoid subtracting two O(N^2) quantities.
  NeumaierSum<double> denominator;
  for (std::int64_t k = 1; k <= n.value(); ++k) {
    const double kd = static_cast<double>(k);
    denominator.add(kd * (log_deficit(k) - std::log1p(1.0 / kd)));
  }
  return numerator / denominator.value();
}

double residue_inv_chi_at_2_laurent(TruncationIndex n) {
  auto g = [n](double s) { return (s - 2.0) / chi_real(n, s); };
  return richardson_midpoint(g, 2.0, config::kLaurentStep);
}

double residue_inv_chi_at_1_laurent(TruncationIndex n) {
  auto f = [n](double s) {
    const double d = s - 1.0;
    return d * d / chi_real(n, s);
  };
  return richardson_derivative(f, 1.0, config::kLaurentStep);
}

ChiLimitsReport chi_limits_check(TruncationIndex n) {
  ChiLimitsReport report;
  constexpr std::array<double, 3> kEps = {1e-2, 1e-3, 1e-4};
  for (std::size_t i = 0; i < kEps.size(); ++i) {
    const double eps = kEps[i];
    report.pole_probe[i] = eps * eps * std::abs(chi_real(n, eps));
    const double h = eps * 1e-3;
    const double derivative = (chi_real(n, eps + h) - chi_real(n, eps - h)) / (2.0 * h);
    report.derivative_probe[i] = eps * eps * eps * std::abs(derivative);
    report.double_zero_probe[i] = std::abs(chi_real(n, 1.0 - eps)) / (eps * eps);
  }
  report.value_at_half = chi(n, ComplexValue{0.5, 0.0}).value;
  report.value_near_one = std::abs(chi_real(n, 1.0 - 1e-3));
  report.value_at_two = std::abs(chi(n, ComplexValue{2.0, 0.0}).value);

  report.pole_order_two = stabilizes(report.pole_probe, 1e-2);
  report.derivative_diverges = stabilizes(report.derivative_probe, 2e-2);
  report.double_zero_at_one = stabilizes(report.double_zero_probe, 1e-2);
  report.passed = report.pole_order_two && report.derivative_diverges &&
                  report.double_zero_at_one && report.value_at_half == ComplexValue{1.0, 0.0} &&
                  report.value_at_two <= 1e-12;
  return report;
}

double chi_integer(TruncationIndex n, int order) {
  if (order < 2) throw DomainError("chi_integer requires n >= 2, got " + std::to_string(order));
  const double k = static_cast<double>(order);
  // zeta_w(N; 1-n) = (1/n) sum_m ((n-1) m^(n-1) + m^n - (m+1)^(n-1) m)
  NeumaierSum<double> numerator;
  for (std::int64_t m = 1; m <= n.value(); ++m) {
    const double md = static_cast<double>(m);
    const double lower = std::pow(md, k - 1.0);
    numerator.add(((k - 1.0) * lower + lower * md - std::pow(md + 1.0, k - 1.0) * md) / k);
  }
  return numerator.value() / zeta_w_closed_integer(n, order);
}

double successive_quotient_limit(TruncationIndex n) {
  const double big_n = n.as_double();
  const double deficit_n = abc_sums(n).deficit;
  const double deficit_next = deficit_n + log_deficit(n.value() + 1);
  return (big_n + 2.0) * big_n * deficit_next / ((big_n + 1.0) * (big_n + 1.0) * deficit_n);
}

double successive_quotient_extrapolated(TruncationIndex n) {
  const TruncationIndex next = n.next();
  auto quotient = [&](double eps) { return chi_real(next, 1.0 - eps) / chi_real(n, 1.0 - eps); };
  constexpr double kEps = 1e-4;
  return 2.0 * quotient(0.5 * kEps) - quotient(kEps);
}

double zeta_derivative_reference(double x) {
  auto f = [](double s) {
    const auto r = zeta_reference(ComplexValue{s, 0.0});
    if (r.pole) throw DomainError("zeta derivative sampled at the pole s = 1");
    return r.value.real();
  };
  auto five_point = [&](double h) {
    return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
  };
  const double h = config::kZetaDerivativeStep;
  return (16.0 * five_point(h) - five_point(2.0 * h)) / 15.0;
}

double nu_residue(int n) {
  if (n < 1 || n > 12) {
    throw DomainError("nu_residue requires 1 <= n <= 12, got " + std::to_string(n));
  }
  if (n % 2 == 1) return 0.0;
  const double zeta_value = zeta_reference(ComplexValue{1.0 + n, 0.0}).value.real();
  return zeta_value / zeta_derivative_reference(-static_cast<double>(n));
}

}  // namespace zws

namespace zws {

InverseLogFit extrapolate_inverse_log(const std::array<std::int64_t, 3>& n,
                                      const std::array<double, 3>& values) {
  const double x1 = std::log(static_cast<double>(n[0]));
  const double x2 = std::log(static_cast<double>(n[1]));
  const double x3 = std::log(static_cast<double>(n[2]));
  // Eliminating scale from consecutive differences leaves a linear equation in shift.
  const double alpha = (values[1] - values[0]) / (x1 - x2);
  const double beta = (values[2] - values[1]) / (x2 - x3);
  if (alpha == beta) throw DomainError("inverse-log fit is degenerate");
  InverseLogFit fit;
  fit.shift = (beta * x3 - alpha * x1) / (alpha - beta);
  fit.scale = alpha * (x1 + fit.shift) * (x2 + fit.shift);
  fit.limit = values[0] - fit.scale / (x1 + fit.shift);
  return fit;
}

}  // namespace zws
