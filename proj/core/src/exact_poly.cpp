#include "zws/exact_poly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "zws/special_functions.hpp"
#include "zws/types.hpp"

namespace zws {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(unsigned degree, Rational coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

RationalPolynomial RationalPolynomial::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<Rational> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(Rational::parse(token));
  if (coeffs.empty()) throw DomainError("empty polynomial row");
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial faulhaber(int k) {
  if (k < 0 || k > 16) throw DomainError("faulhaber requires 0 <= k <= 16, got " + std::to_string(k));
  // P_k(N) = 1/(k+1) sum_j C(k+1, j) B_j^+ N^(k+1-j), with B_1^+ = +1/2.
  auto bernoulli = bernoulli_numbers(k);
  if (k >= 1) bernoulli[1] = Rational(1, 2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 2);
  const Rational scale(BigInt(1), BigInt(k + 1));
  for (int j = 0; j <= k; ++j) {
    coeffs[static_cast<std::size_t>(k + 1 - j)] =
        Rational(binomial(static_cast<unsigned>(k + 1), static_cast<unsigned>(j))) * bernoulli[j] * scale;
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial zeta_w_neg_summand(int n) {
  if (n < 2) throw DomainError("zeta_w_neg_summand requires n >= 2");
  const auto un = static_cast<unsigned>(n);
  // m (m+1)^(n-1) = sum_j C(n-1, j) m^(j+1)
  std::vector<Rational> coeffs(un + 1);
  for (unsigned j = 0; j <= un - 1; ++j) coeffs[j + 1] = Rational(binomial(un - 1, j));
  RationalPolynomial summand(std::move(coeffs));
  summand -= RationalPolynomial::monomial(un);
  summand += RationalPolynomial::monomial(un - 1, Rational(1 - n));
  return summand;
}

RationalPolynomial zeta_w_neg_poly(int n) {
  if (n < 2 || n > 12) throw DomainError("zeta_w_neg_poly requires 2 <= n <= 12, got " + std::to_string(n));
  const RationalPolynomial summand = zeta_w_neg_summand(n);
  // The m^n and m^(n-1) terms cancel, leaving degree n-2 in m.
  if (summand.degree() > n - 2) throw DomainError("summand leading powers failed to cancel");
  RationalPolynomial total;
  for (int p = 0; p <= summand.degree(); ++p) {
    const Rational c = summand.coeff(static_cast<unsigned>(p));
    if (!c.is_zero()) total += faulhaber(p) * c;
  }
  return total * Rational(BigInt(-1), BigInt(n));
}

std::vector<RationalPolynomial> zeta_w_neg_table(int n_max) {
  if (n_max < 2 || n_max > 12) throw DomainError("table n_max must lie in [2, 12]");
  std::vector<RationalPolynomial> rows;
  for (int n = 2; n <= n_max; ++n) rows.push_back(zeta_w_neg_poly(n));
  return rows;
}

std::vector<RationalPolynomial> read_table(std::istream& in) {
  std::vector<RationalPolynomial> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(RationalPolynomial::parse(line));
  }
  return rows;
}

void write_table(std::ostream& out, const std::vector<RationalPolynomial>& rows) {
  for (const auto& row : rows) out << row.to_string() << '\n';
}

namespace {

struct NumeratorSides {
  Rational binomial_form;
  Rational expanded_form;  // (1/n)((n-1) m^(n-1) + m^n - (m+1)^(n-1) m)
};

NumeratorSides numerator_sides(int n, std::int64_t m) {
  if (n < 2 || n > 12) throw DomainError("chi numerator identity requires 2 <= n <= 12");
  if (m < 1) throw DomainError("chi numerator identity requires m >= 1");
  const auto un = static_cast<unsigned>(n);
  const Rational inv_n(BigInt(1), BigInt(n));
  const BigInt bm(m);
  NumeratorSides sides;
  for (unsigned k = 1; k + 2 <= un; ++k) {
    sides.binomial_form += Rational(BigInt(pow(bm, k)) * binomial(un - 1, k - 1)) * inv_n;
  }
  const BigInt expanded = BigInt(n - 1) * pow(bm, un - 1) + pow(bm, un) - pow(BigInt(bm + 1), un - 1) * bm;
  sides.expanded_form = Rational(expanded) * inv_n;
  return sides;
}

}  // namespace

bool chi_numerator_identity(int n, std::int64_t m) {
  const auto sides = numerator_sides(n, m);
  return sides.binomial_form == -sides.expanded_form;
}

bool chi_numerator_identity_as_printed(int n, std::int64_t m) {
  const auto sides = numerator_sides(n, m);
  return sides.binomial_form == sides.expanded_form;
}

BernoulliComparison bernoulli_comparison(int n) {
  if (n < 1 || n > 6) throw DomainError("bernoulli_comparison requires 1 <= n <= 6");
  BernoulliComparison report;
  report.n = n;
  report.left = zeta_w_neg_poly(2 * n);
  const Rational b2n = bernoulli_numbers(2 * n).back();
  const RationalPolynomial n_plus_one_sq({Rational(1), Rational(2), Rational(1)});
  report.right = n_plus_one_sq * (b2n * Rational(BigInt(2 * n + 1), BigInt(2)));
  report.difference = report.left - report.right;
  return report;
}

}  // namespace zws
