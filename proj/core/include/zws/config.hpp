#pragma once

#include <cstddef>

// Fixed numerical constants shared by the residue and integral routines.
namespace zws::config {

// Laurent-fit step for residues of chi; Richardson removes the h^2 term.
inline constexpr double kLaurentStep = 1e-3;

// Step for the five-point derivative of zeta at the negative even integers.
inline constexpr double kZetaDerivativeStep = 1e-3;

// Adaptive Gauss-Kronrod defaults.
inline constexpr double kQuadAbsTol = 1e-10;
inline constexpr double kQuadRelTol = 1e-12;
inline constexpr std::size_t kQuadMaxIntervals = 2000;

// Series / continued-fraction switchover for E1.
inline constexpr double kE1SeriesRadius = 4.0;

// Acceptance tolerances of the integral closed forms.
inline constexpr double kUnitIntegralTol = 1e-8;
inline constexpr double kStripIntegralTol = 1e-7;

}  // namespace zws::config
