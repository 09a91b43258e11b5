#pragma once

#include <cstdint>
#include <vector>

#include "zws/rational.hpp"
#include "zws/types.hpp"

// Real and complex special functions used by the closed forms. All functions
// are pure and may be called concurrently.
namespace zws {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(z) for complex z away from the non-positive integers.
ComplexValue gamma(ComplexValue z);

/// Digamma Psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

/// Psi(1, N+1) = zeta(2) - sum_{k=1}^N k^-2, the trigamma tail.
double trigamma_tail(std::int64_t n);

/// Polygamma Psi(m, x) = (-1)^(m+1) m! sum_{k>=0} (x+k)^-(m+1), for m >= 1,
/// x > 0. Argument order is (order, argument).
double polygamma_int(int m, double x);

/// Logarithmic integral li(x) for x > 1, from the series
/// gamma + ln ln x + sum_{k>=1} (ln x)^k / (k k!).
double log_integral(double x);

/// Exponential integral E1(t) on the principal branch (cut along the
/// negative real axis). Pole marker at t = 0; DomainError on the cut.
EvalResult exp_integral_e1(ComplexValue t);

/// Exact Bernoulli numbers B_0 .. B_max, with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int max);

/// Reference Riemann zeta for tests and oracles: Euler-Maclaurin for
/// Re s >= 0, functional equation for Re s < 0. Pole marker at s = 1.
EvalResult zeta_reference(ComplexValue s);

/// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace zws
