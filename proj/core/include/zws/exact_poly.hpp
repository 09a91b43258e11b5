#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zws/rational.hpp"

namespace zws {

/// Dense polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial monomial(unsigned degree, Rational coeff = Rational(1));

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(unsigned k) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  /// Space-separated coefficients, lowest degree first; "0" when zero.
  std::string to_string() const;
  /// Inverse of to_string().
  static RationalPolynomial parse(const std::string& line);

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scale);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// P_k with P_k(N) = sum_{m=1}^N m^k, 0 <= k <= 16.
RationalPolynomial faulhaber(int k);

/// The summand m (m+1)^(n-1) - m^n + (1-n) m^(n-1) of zeta_w(N; 1-n), as a
/// polynomial in m.
RationalPolynomial zeta_w_neg_summand(int n);

/// zeta_w(N; 1-n) as an exact polynomial in N, 2 <= n <= 12.
RationalPolynomial zeta_w_neg_poly(int n);

/// Rows zeta_w_neg_poly(2) .. zeta_w_neg_poly(n_max).
std::vector<RationalPolynomial> zeta_w_neg_table(int n_max);

/// One polynomial per line in to_string() form.
std::vector<RationalPolynomial> read_table(std::istream& in);
void write_table(std::ostream& out, const std::vector<RationalPolynomial>& rows);

/// Exact check of the binomial form of the integer-argument chi numerator:
///   sum_{k=1}^{n-2} m^k C(n-1, k-1) / n = -(1/n)((n-1) m^(n-1) + m^n - (m+1)^(n-1) m).
bool chi_numerator_identity(int n, std::int64_t m);

/// The same two expressions equated without the minus sign on the right.
/// Holds only for n = 2; kept to document the sign.
bool chi_numerator_identity_as_printed(int n, std::int64_t m);

struct BernoulliComparison {
  int n = 0;
  RationalPolynomial left;        // zeta_w(N; 1-2n)
  RationalPolynomial right;       // B_2n (N+1)^2 (2n+1)/2
  RationalPolynomial difference;  // left - right
};

/// Side-by-side report of zeta_w(N; 1-2n) and B_2n (N+1)^2 (2n+1)/2, 1 <= n <= 6.
/// No equality is implied.
BernoulliComparison bernoulli_comparison(int n);

}  // namespace zws
