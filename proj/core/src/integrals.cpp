#include "zws/integrals.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "zws/config.hpp"
#include "zws/quadrature.hpp"
#include "zws/special_functions.hpp"
#include "zws/summation.hpp"
#include "zws/zeta_w.hpp"

namespace zws {
namespace {

ComplexValue ei_term(TruncationIndex n, double t) {
  const double big_n = n.as_double();
  const double l = std::log1p(big_n);
  const ComplexValue shifted = exp_integral_e1(ComplexValue{-l, t * l}).value;
  const ComplexValue on_axis = exp_integral_e1(ComplexValue{0.0, t * l}).value;
  return big_n / (big_n + 1.0) * (shifted - on_axis);
}

IntegralResult finish(ComplexValue closed_form, const QuadratureResult<ComplexValue>& quad,
                      double tolerance, const char* what) {
  if (!quad.converged || quad.abs_error > tolerance) {
    throw QuadratureError(std::string(what) + ": quadrature error estimate " +
                          std::to_string(quad.abs_error) + " exceeds tolerance");
  }
  return {closed_form, quad.value, std::abs(closed_form - quad.value), quad.abs_error};
}

}  // namespace

IntegralResult integral_unit(TruncationIndex n) {
  const double big_n = n.as_double();
  NeumaierSum<double> closed;
  closed.add(1.0);
  closed.add(big_n / (big_n + 1.0) *
             (log_integral(big_n + 1.0) - log_integral((big_n + 1.0) * (big_n + 1.0))));
  for (std::int64_t k = 1; k < n.value(); ++k) {
    const double kd = static_cast<double>(k);
    closed.add(kd / std::log1p(kd));
  }

  // Both endpoints are zeros of the integrand and s = 1 lies outside.
  auto integrand = [n](double s) { return zeta_w(n, ComplexValue{s, 0.0}).value; };
  const auto quad = integrate_adaptive<ComplexValue>(integrand, -1.0, 0.0);
  return finish(ComplexValue{closed.value(), 0.0}, quad, config::kUnitIntegralTol, "integral_unit");
}

IntegralResult integral_strip(TruncationIndex n, double t) {
  if (t == 0.0 || !std::isfinite(t)) {
    throw DomainError("integral_strip requires a finite t != 0");
  }
  NeumaierSum<ComplexValue> closed;
  closed.add(1.0);
  closed.add(ei_term(n, t));
  for (std::int64_t k = 1; k < n.value(); ++k) {
    const double kd = static_cast<double>(k);
    const double log_next = std::log1p(kd);
    const ComplexValue phase = std::exp(ComplexValue{0.0, -t * log_next});  // (k+1)^(-i t)
    closed.add(kd * phase / ((kd + 1.0) * log_next));
  }

  auto integrand = [n, t](double c) { return zeta_w(n, ComplexValue{c, t}).value; };
  const auto quad = integrate_adaptive<ComplexValue>(integrand, 0.0, 1.0);
  return finish(closed.value(), quad, config::kStripIntegralTol, "integral_strip");
}

std::vector<double> strip_ei_term_decay(TruncationIndex n, std::span<const double> t_values) {
  std::vector<double> out;
  out.reserve(t_values.size());
  for (double t : t_values) {
    if (!(t > 0.0)) throw DomainError("strip_ei_term_decay requires positive t");
    out.push_back(std::abs(ei_term(n, t)));
  }
  return out;
}

}  // namespace zws
