#pragma once

#include <array>
#include <cstdint>

#include "zws/types.hpp"

// The finite reflection function chi(N; s) = zeta_w(N; 1-s) / zeta_w(N; s),
// its residues, and the residues of nu(s) = zeta(1-s)/zeta(s).
namespace zws {

/// chi(N; s). Order-two pole at s = 0 (reported as a pole marker); exact 0 at
/// s = 1 and exact 1 at s = 1/2.
EvalResult chi(TruncationIndex n, ComplexValue s);

/// The logarithmic partial sums entering the s = 0 residue:
///   a(N) = sum n ln(1 + 1/n)
///   b(N) = sum (n^2 ln n - n^2 ln(n+1) - ln n) / (n (n+1))
///   c(N) = 1/2 sum n (ln(n+1)^2 - ln(n)^2)
/// `deficit` holds N - a(N), summed termwise so it keeps its digits at large N.
struct AbcSums {
  std::int64_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double deficit = 0.0;
};

AbcSums abc_sums(TruncationIndex n);

enum class ResidueMethod { closed_form, laurent_fit };

struct ResidueReport {
  double value = 0.0;
  ResidueMethod method = ResidueMethod::closed_form;
  double est_error = 0.0;
};

/// Coefficient of 1/s in the Laurent expansion of chi(N; s) at s = 0, from the
/// closed form in a, b, c. est_error is the distance to laurent_residue().
ResidueReport residue_chi_at_0(TruncationIndex n);

/// d/ds [s^2 chi(N; s)] at s = 0 by Richardson-extrapolated central
/// differences at s = +-h, +-2h.
double laurent_residue(TruncationIndex n);

/// Residue of 1/chi(N; s) at its simple pole s = 2, closed form.
double residue_inv_chi_at_2(TruncationIndex n);

/// Same residue from (s-2)/chi(N; s) sampled around s = 2.
double residue_inv_chi_at_2_laurent(TruncationIndex n);

/// Coefficient of 1/(s-1) of 1/chi(N; s) at its double pole s = 1, by Laurent fit.
double residue_inv_chi_at_1_laurent(TruncationIndex n);

struct ChiLimitsReport {
  // eps^2 |chi(eps)| and eps^3 |chi'(eps)| for eps = 1e-2, 1e-3, 1e-4.
  std::array<double, 3> pole_probe{};
  std::array<double, 3> derivative_probe{};
  // |chi(1 - eps)| / eps^2 for the same eps.
  std::array<double, 3> double_zero_probe{};
  ComplexValue value_at_half{};
  double value_near_one = 0.0;  // |chi(1 - 1e-3)|
  double value_at_two = 0.0;    // |chi(2)|
  bool pole_order_two = false;
  bool derivative_diverges = false;
  bool double_zero_at_one = false;
  bool passed = false;
};

/// Numerical probes of the limits of chi(N; s) at s = 0, 1/2, 1 and 2.
ChiLimitsReport chi_limits_check(TruncationIndex n);

/// chi(N; n) for integer n >= 2 from the expanded power-sum numerator over the
/// polygamma closed form of zeta_w(N; n).
double chi_integer(TruncationIndex n, int order);

/// lim_{s->1} chi(N+1; s) / chi(N; s) in closed form.
double successive_quotient_limit(TruncationIndex n);

/// The same limit from chi sampled at s = 1 - eps, extrapolated to eps = 0.
double successive_quotient_extrapolated(TruncationIndex n);

/// Residue of nu(s) = zeta(1-s)/zeta(s) at s = -n, 1 <= n <= 12: exactly 0 for
/// odd n, zeta(1+n)/zeta'(-n) for even n.
double nu_residue(int n);

/// zeta'(x) from the reference zeta by a Richardson-extrapolated five-point
/// central difference.
double zeta_derivative_reference(double x);

}  // namespace zws

namespace zws {

/// Three-point fit r(N) = limit + scale / (ln N + shift), solved exactly.
/// Used to extrapolate the slowly converging s = 0 residue.
struct InverseLogFit {
  double limit = 0.0;
  double scale = 0.0;
  double shift = 0.0;
};

InverseLogFit extrapolate_inverse_log(const std::array<std::int64_t, 3>& n,
                                      const std::array<double, 3>& values);

}  // namespace zws
