#include "zws/verify.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "zws/exact_poly.hpp"
#include "zws/integrals.hpp"
#include "zws/quadrature.hpp"
#include "zws/reflection.hpp"
#include "zws/special_functions.hpp"
#include "zws/zeta_w.hpp"

namespace zws {
namespace {

constexpr double kPi = std::numbers::pi;

// Each check returns an empty string on success or a description of the failure.
using Check = std::function<std::string()>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string check_special_functions() {
  for (double x = 0.5; x <= 100.0; x += 0.5) {
    if (std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) > 1e-12) return "digamma recurrence at x=" + fmt(x);
  }
  for (int m = 1; m <= 4; ++m) {
    for (double x = 0.5; x <= 20.0; x += 0.75) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      double factorial = 1.0;
      for (int i = 2; i <= m; ++i) factorial *= i;
      const double expected = sign * factorial * std::pow(x, -m - 1.0);
      const double got = polygamma_int(m, x + 1.0) - polygamma_int(m, x);
      if (std::abs(got - expected) > 1e-10 * std::max(1.0, std::abs(expected))) {
        return "polygamma recurrence m=" + std::to_string(m) + " x=" + fmt(x);
      }
    }
  }
  for (double x : {2.0, 4.0, 10.0, 101.0}) {
    auto integrand = [](double y) { return y == 0.0 ? 1.0 : std::expm1(y) / y; };
    const auto q = integrate_adaptive<double>(integrand, 0.0, std::log(x));
    const double oracle = q.value + std::log(std::log(x)) + kEulerGamma;
    if (std::abs(log_integral(x) - oracle) > 1e-10 * std::abs(oracle)) return "li series vs quadrature at x=" + fmt(x);
  }
  for (const ComplexValue t : {ComplexValue{1.0, 0.0}, ComplexValue{0.5, 2.0}, ComplexValue{3.0, -1.0},
                               ComplexValue{5.0, 1.0}, ComplexValue{2.0, 6.0}}) {
    auto inner = [t](double x) {
      auto row = [t, x](double y) { return std::exp(-t * x * y); };
      return integrate_adaptive<ComplexValue>(row, 0.0, 1.0).value;
    };
    const ComplexValue oracle = t * integrate_adaptive<ComplexValue>(inner, 0.0, 1.0).value - kEulerGamma - std::log(t);
    if (std::abs(exp_integral_e1(t).value - oracle) > 1e-8 * std::max(1.0, std::abs(oracle))) {
      return "E1 vs double integral at t=" + fmt(t.real()) + "+" + fmt(t.imag()) + "i";
    }
  }
  const auto b = bernoulli_numbers(30);
  for (int k = 1; k <= 14; ++k) {
    if (!b[2 * k + 1].is_zero()) return "odd Bernoulli number nonzero";
    if (b[2 * k].sign() != ((k % 2 == 1) ? 1 : -1)) return "Bernoulli sign pattern";
  }
  if (std::abs(zeta_reference(2.0).value.real() - kPi * kPi / 6.0) > 1e-12) return "zeta(2)";
  if (std::abs(zeta_reference(4.0).value.real() - std::pow(kPi, 4) / 90.0) > 1e-12) return "zeta(4)";
  return {};
}

std::string check_zeros() {
  for (std::int64_t n : {1, 10, 100, 1000}) {
    const TruncationIndex idx(n);
    for (double s : {0.0, -1.0}) {
      const double v = std::abs(zeta_w(idx, s).value);
      if (v > 1e-13 * static_cast<double>(n)) return "|zeta_w(" + std::to_string(n) + "," + fmt(s) + ")| = " + fmt(v);
    }
  }
  return {};
}

std::string check_conjugate_symmetry() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re(-3.0, 4.0);
  std::uniform_real_distribution<double> im(-15.0, 15.0);
  std::uniform_int_distribution<int> n_dist(1, 60);
  for (int i = 0; i < 50; ++i) {
    const TruncationIndex n(n_dist(rng));
    const ComplexValue s{re(rng), im(rng)};
    if (zeta_w(n, std::conj(s)).value != std::conj(zeta_w(n, s).value)) return "zeta_w conjugate symmetry";
    const auto a = chi(n, std::conj(s)).value;
    const auto c = std::conj(chi(n, s).value);
    if (std::abs(a - c) > 1e-12 * std::max(1.0, std::abs(c))) return "chi conjugate symmetry";
  }
  return {};
}

std::string check_closed_integer() {
  for (std::int64_t n : {1, 7, 50}) {
    for (int k = 2; k <= 8; ++k) {
      const double closed = zeta_w_closed_integer(TruncationIndex(n), k);
      const double direct = zeta_w(TruncationIndex(n), static_cast<double>(k)).value.real();
      if (std::abs(closed - direct) > 1e-9 * std::abs(direct)) {
        return "closed form at N=" + std::to_string(n) + " n=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string check_mellin() {
  const std::array<std::pair<std::int64_t, ComplexValue>, 5> points = {{
      {5, {2.0, 0.0}}, {3, {0.5, 0.0}}, {4, {2.0, 3.0}}, {10, {1.5, 0.0}}, {2, {3.0, -1.0}}}};
  for (const auto& [n, s] : points) {
    const auto quad = mellin_integrand_quadrature(TruncationIndex(n), s).value;
    const auto direct = zeta_w(TruncationIndex(n), s).value;
    if (std::abs(quad - direct) > 1e-7) return "Mellin quadrature at N=" + std::to_string(n);
  }
  return {};
}

std::string check_functional_identity() {
  for (std::int64_t n : {1, 5, 25}) {
    const TruncationIndex idx(n);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const ComplexValue s{-1.9 + 0.43 * i, -4.5 + 1.0 * j};
        const auto product = chi(idx, 1.0 - s).value * chi(idx, s).value;
        if (std::abs(product - 1.0) > 1e-11) return "chi(1-s) chi(s) != 1 at N=" + std::to_string(n);
      }
    }
  }
  return {};
}

std::string check_critical_modulus() {
  for (std::int64_t n : {1, 10, 100}) {
    for (int k = -20; k <= 20; ++k) {
      const double m = std::abs(chi(TruncationIndex(n), ComplexValue{0.5, static_cast<double>(k)}).value);
      if (std::abs(m - 1.0) > 1e-11) return "|chi(1/2+it)| != 1 at N=" + std::to_string(n);
    }
  }
  return {};
}

std::string check_residue_dual(std::initializer_list<std::int64_t> ns) {
  for (std::int64_t n : ns) {
    const TruncationIndex idx(n);
    const double closed = residue_chi_at_0(idx).value;
    const double fit = laurent_residue(idx);
    if (std::abs(closed - fit) > 1e-6) return "s=0 residue closed form vs Laurent at N=" + std::to_string(n);
    const double inv_closed = residue_inv_chi_at_2(idx);
    const double inv_fit = residue_inv_chi_at_2_laurent(idx);
    if (std::abs(inv_closed - inv_fit) > 1e-6) return "s=2 residue of 1/chi at N=" + std::to_string(n);
  }
  return {};
}

std::string check_golden_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "cannot open golden table " + path;
  const auto golden = read_table(in);
  const auto computed = zeta_w_neg_table(12);
  if (golden.size() != computed.size()) return "golden table has " + std::to_string(golden.size()) + " rows";
  for (std::size_t i = 0; i < golden.size(); ++i) {
    if (!(golden[i] == computed[i])) return "row n=" + std::to_string(i + 2) + " differs from the engine";
  }
  return {};
}

std::string check_exact_identities() {
  for (int n = 2; n <= 12; ++n) {
    for (std::int64_t m = 1; m <= 50; ++m) {
      if (!chi_numerator_identity(n, m)) return "binomial identity n=" + std::to_string(n);
    }
  }
  for (int k = 0; k <= 16; ++k) {
    const auto p = faulhaber(k);
    BigInt brute = 0;
    for (int n = 1; n <= 100; ++n) {
      brute += pow(BigInt(n), static_cast<unsigned>(k));
      if (!(p.evaluate(Rational(n)) == Rational(brute))) return "Faulhaber k=" + std::to_string(k);
    }
  }
  return {};
}

std::string check_integrals(std::initializer_list<std::int64_t> unit_ns) {
  for (std::int64_t n : unit_ns) {
    const auto r = integral_unit(TruncationIndex(n));
    if (r.abs_diff > 1e-8) return "unit integral at N=" + std::to_string(n);
  }
  const std::array<std::pair<std::int64_t, double>, 3> strip = {{{1, 1.0}, {4, 3.0}, {10, 0.5}}};
  for (const auto& [n, t] : strip) {
    const auto r = integral_strip(TruncationIndex(n), t);
    if (r.abs_diff > 1e-7) return "strip integral at N=" + std::to_string(n);
  }
  const std::array<double, 3> ts = {10.0, 100.0, 1000.0};
  const auto decay = strip_ei_term_decay(TruncationIndex(2), ts);
  for (std::size_t i = 1; i < decay.size(); ++i) {
    if (decay[i - 1] < 5.0 * decay[i]) return "Ei term decays by less than 5x per decade";
  }
  return {};
}

std::string check_nu_residues() {
  for (int n : {1, 3, 5, 7, 9, 11}) {
    if (nu_residue(n) != 0.0) return "odd nu residue nonzero";
  }
  const double r2 = nu_residue(2);
  const double r4 = nu_residue(4);
  if (std::abs(r2 + 4.0 * kPi * kPi) > 1e-5 * 4.0 * kPi * kPi) return "nu residue at -2";
  const double c4 = 4.0 * std::pow(kPi, 4) / 3.0;
  if (std::abs(r4 - c4) > 1e-5 * c4) return "nu residue at -4";
  return {};
}

std::string check_sign_change() {
  const auto r176 = residue_chi_at_0(TruncationIndex(176));
  const auto r177 = residue_chi_at_0(TruncationIndex(177));
  const double f176 = laurent_residue(TruncationIndex(176));
  const double f177 = laurent_residue(TruncationIndex(177));
  if (!(r176.value < 0.0 && f176 < 0.0)) return "residue at N=176 is not negative";
  if (!(r177.value > 0.0 && f177 > 0.0)) return "residue at N=177 is not positive";
  return {};
}

std::string check_residue_limit() {
  const std::array<std::int64_t, 3> ns = {1000, 10000, 100000};
  std::array<double, 3> values{};
  for (std::size_t i = 0; i < ns.size(); ++i) values[i] = residue_chi_at_0(TruncationIndex(ns[i])).value;
  if (!(values[0] < values[1] && values[1] < values[2] && values[2] < 1.0)) return "residue not increasing toward 1";
  const auto fit = extrapolate_inverse_log(ns, values);
  if (std::abs(fit.limit - 1.0) > 0.05) return "extrapolated limit " + fmt(fit.limit);
  return {};
}

std::string check_inverse_residue_decay() {
  const double small = std::abs(residue_inv_chi_at_2(TruncationIndex(100)));
  const double large = std::abs(residue_inv_chi_at_2(TruncationIndex(10000)));
  if (large > 0.1 * small) return "1/chi residue at s=2 decays by less than 10x";
  return {};
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  std::vector<std::pair<std::string, Check>> suites = {
      {"special functions", check_special_functions},
      {"zeta_w zeros at s=0 and s=-1", check_zeros},
      {"conjugate symmetry", check_conjugate_symmetry},
      {"zeta_w integer closed form", check_closed_integer},
      {"Mellin quadrature consistency", check_mellin},
      {"chi functional identity", check_functional_identity},
      {"chi critical-line modulus", check_critical_modulus},
      {"residue dual-method consistency", [] { return check_residue_dual({1, 10, 20}); }},
      {"golden table", [&opts] { return check_golden_table(opts.golden_table_path); }},
      {"exact identities", check_exact_identities},
      {"integral closed forms", [] { return check_integrals({1, 5, 25}); }},
      {"nu residues", check_nu_residues},
  };
  if (opts.level == VerifyLevel::full) {
    suites.emplace_back("residue sign change at N=176→177", check_sign_change);
    suites.emplace_back("residue dual-method consistency (large N)",
                        [] { return check_residue_dual({176, 177, 1000}); });
    suites.emplace_back("residue limit at s=0 (extrapolated over N=1e3..1e5)", check_residue_limit);
    suites.emplace_back("1/chi residue decay at s=2", check_inverse_residue_decay);
    suites.emplace_back("unit integral at N=100", [] { return check_integrals({100}); });
  }

  std::vector<SuiteResult> results;
  for (const auto& [name, check] : suites) {
    SuiteResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace zws
