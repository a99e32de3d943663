#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

/// m-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic_polynomial(std::uint64_t m);

/// Exact element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// modulo the m-th cyclotomic polynomial. The representation is canonical for a
/// fixed conductor; values over different conductors compare through lcm.
class CycNumber {
 public:
  CycNumber() : CycNumber(1) {}
  explicit CycNumber(std::uint64_t conductor);
  CycNumber(std::uint64_t conductor, const Rational& q);
  static CycNumber rational(const Rational& q, std::uint64_t conductor = 1) { return CycNumber(conductor, q); }
  /// zeta_m^k (k taken modulo m).
  static CycNumber zeta(std::uint64_t m, std::int64_t k = 1);

  std::uint64_t conductor() const { return m_; }
  const std::vector<Rational>& coordinates() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value of a rational element; throws InvalidArgument otherwise.
  Rational to_rational() const;
  /// Integer value; throws InvalidArgument if not a rational integer.
  Integer to_integer() const;

  /// Image in Q(zeta_M) for a multiple M of the conductor.
  CycNumber embed(std::uint64_t M) const;
  /// Automorphism zeta -> zeta^a, gcd(a, m) = 1.
  CycNumber galois(std::uint64_t a) const;
  /// Complex conjugation.
  CycNumber conj() const { return galois(m_ == 1 ? 1 : m_ - 1); }

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const Rational& q);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const Rational& q) { return a *= q; }
  friend CycNumber operator*(const Rational& q, CycNumber a) { return a *= q; }

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
  /// Total order: lexicographic on power-basis coordinates after embedding
  /// into the common conductor. Not compatible with the real ordering.
  friend int compare(const CycNumber& a, const CycNumber& b);

  /// "1/2 - z^2 + 3*z^5 (m=12)" style text; rationals print without suffix.
  std::string to_string() const;

 private:
  void bring_to(std::uint64_t M);
  std::uint64_t m_ = 1;
  std::vector<Rational> c_;
};

}  // namespace gkc
