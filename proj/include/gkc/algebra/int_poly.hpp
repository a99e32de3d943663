#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gkc/algebra/integer.hpp"

namespace gkc {

/// Dense univariate polynomial over Z, constant term first. The coefficient
/// vector is kept trimmed so that the last entry is nonzero; the zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  /// Monic polynomial X^n + a_{n-1} X^{n-1} + ... + a_0 from [a_0, ..., a_{n-1}].
  static IntPoly from_monic_tail(const std::vector<Integer>& tail);
  static IntPoly monomial(const Integer& c, int degree);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of X^i (zero beyond the degree).
  Integer coeff(int i) const;
  const Integer& leading() const;

  /// [a_0, ..., a_{n-1}] for a monic polynomial of degree n.
  std::vector<Integer> monic_tail() const;

  IntPoly derivative() const;
  Integer content() const;
  IntPoly primitive_part() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  /// Sign of the polynomial at x.
  int sign_at(const Rational& x) const;

  /// f(X + shift).
  IntPoly shifted(const Integer& shift) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division by a nonzero integer; throws if some coefficient is not divisible.
  IntPoly divexact(const Integer& c) const;

  /// "X^3 - 26*X - 12" style rendering.
  std::string to_string() const;
  /// "[-12,-26,0]" rendering of a monic polynomial.
  std::string to_vector_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
void pseudo_divide(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);

/// Primitive gcd over Z[X] (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over Z[X]; throws Internal when b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

/// Parses "[a0, a1, ..., a_{n-1}]" as the monic polynomial X^n + ... + a0.
IntPoly parse_monic_vector(const std::string& text);

}  // namespace gkc
