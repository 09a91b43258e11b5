#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "zws/config.hpp"
#include "zws/summation.hpp"
#include "zws/types.hpp"

namespace zws {

template <typename T>
struct QuadratureResult {
  T value{};
  double abs_error = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = config::kQuadAbsTol;
  double rel_tol = config::kQuadRelTol;
  std::size_t max_intervals = config::kQuadMaxIntervals;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Nodes are listed for x >= 0; index 7 is the centre.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Segment {
  double a;
  double b;
  T value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename T, typename F>
Segment<T> gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(centre);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive G7/K15 integration of f over [a, b]. T may be double or
/// std::complex<double>. Stops when the summed error estimate falls below
/// max(abs_tol, rel_tol * |I|) or the interval cap is hit.
template <typename T, typename F>
QuadratureResult<T> integrate_adaptive(F&& f, double a, double b,
                                       const QuadratureOptions& opts = {}) {
  std::priority_queue<detail::Segment<T>> heap;
  heap.push(detail::gauss_kronrod_15<T>(f, a, b));

  auto totals = [&heap] {
    auto copy = heap;
    NeumaierSum<T> value;
    NeumaierSum<double> error;
    while (!copy.empty()) {
      value.add(copy.top().value);
      error.add(copy.top().error);
      copy.pop();
    }
    return std::pair{value.value(), error.value()};
  };

  T value = heap.top().value;
  double error = heap.top().error;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)) &&
         heap.size() < opts.max_intervals) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    heap.push(detail::gauss_kronrod_15<T>(f, worst.a, mid));
    heap.push(detail::gauss_kronrod_15<T>(f, mid, worst.b));
    std::tie(value, error) = totals();
  }
  std::tie(value, error) = totals();

  QuadratureResult<T> result;
  result.value = value;
  result.abs_error = error;
  result.intervals = heap.size();
  result.converged =
      error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return result;
}

}  // namespace zws
