#pragma once

#include <span>
#include <vector>

#include "zws/types.hpp"

namespace zws {

/// A closed-form integral next to its adaptive-quadrature value.
struct IntegralResult {
  ComplexValue closed_form{};
  ComplexValue quadrature{};
  double abs_diff = 0.0;
  double quadrature_error = 0.0;  // the integrator's own error estimate
};

/// int_{-1}^{0} zeta_w(N; s) ds
///   = 1 + N/(N+1) (li(N+1) - li((N+1)^2)) + sum_{n=1}^{N-1} n / ln(n+1).
/// Throws QuadratureError if the integrator cannot certify 1e-8.
IntegralResult integral_unit(TruncationIndex n);

/// int_0^1 zeta_w(N; c + i t) dc
///   = 1 + N/(N+1) (E1(i t L - L) - E1(i t L)) + sum_{n=1}^{N-1} n (n+1)^(-i t) / ((n+1) ln(n+1)),
/// with L = ln(N+1). Requires t != 0.
IntegralResult integral_strip(TruncationIndex n, double t);

/// |N/(N+1) (E1(i t L - L) - E1(i t L))| for each t.
std::vector<double> strip_ei_term_decay(TruncationIndex n, std::span<const double> t_values);

}  // namespace zws
