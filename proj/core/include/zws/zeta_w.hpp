#pragma once

#include <cstdint>

#include "zws/types.hpp"

// The truncated zeta approximation
//
//   zeta_w(N; s) = 1/(s-1) * sum_{n=1}^N [ n (n+1)^-s - n^(1-s) + s n^-s ],
//
// which tends to zeta(s) for Re s > 0 and vanishes identically at s = 0 and
// s = -1 for every N.
namespace zws {

/// The unit-interval sawtooth map floor(1/x) (x floor(1/x) + x - 1), 0 < x <= 1.
double sawtooth_w(double x);

/// The raw sum S(N; s) = sum_{n=1}^N [n (n+1)^-s - n^(1-s) + s n^-s], without
/// the 1/(s-1) prefactor. Accumulated in ascending n with Neumaier compensation.
ComplexValue truncated_sum(TruncationIndex n, ComplexValue s);

/// zeta_w(N; s). Pole marker exactly at s = 1.
EvalResult zeta_w(TruncationIndex n, ComplexValue s);

/// Closed form of zeta_w(N; n) for integer n >= 2 through the polygamma
/// function: N/((n-1)(N+1)^n) - cos(pi n) Psi(n-1, N+1)/Gamma(n) + zeta(n).
double zeta_w_closed_integer(TruncationIndex n, int order);

/// One branch of the Mellin integral, int_{1/(n+1)}^{1/n} n (x n + x - 1) x^(s-1) dx,
/// by adaptive quadrature. Requires Re s > 0.
ComplexValue mellin_branch_integral(std::int64_t n, ComplexValue s);

/// s(s+1)/(s-1) times the sum of the first N Mellin branches. Independent
/// quadrature route to zeta_w(N; s); requires Re s > 0, pole marker at s = 1.
EvalResult mellin_integrand_quadrature(TruncationIndex n, ComplexValue s);

/// 1 - n ln(1 + 1/n), accurate for large n where the two terms cancel.
double log_deficit(std::int64_t n);

/// e^z - 1 - z without cancellation for small |z|.
ComplexValue exp_minus_one_minus_z(ComplexValue z);

}  // namespace zws
