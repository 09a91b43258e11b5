#pragma once

#include <cmath>
#include <complex>

namespace zws {

/// Neumaier's improved Kahan summation. The compensation term is folded in
/// only when the value is read, so add() stays branch-light.
template <typename T>
class NeumaierSum;

template <>
class NeumaierSum<double> {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  NeumaierSum& operator+=(double v) {
    add(v);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <>
class NeumaierSum<std::complex<double>> {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }

  NeumaierSum& operator+=(std::complex<double> v) {
    add(v);
    return *this;
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum<double> re_;
  NeumaierSum<double> im_;
};

}  // namespace zws
