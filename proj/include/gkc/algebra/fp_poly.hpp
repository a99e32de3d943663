#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

/// Dense polynomial over the prime field F_p, constant term first, trimmed.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients);
  static FpPoly from_int_poly(const IntPoly& f, std::uint64_t p);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly x(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t coeff(int i) const { return (i < 0 || i > degree()) ? 0 : c_[static_cast<std::size_t>(i)]; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;
  /// Lift to Z[X] with coefficients in [0, p).
  IntPoly lift() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  /// Degree first, then coefficients from the constant term upwards.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero only when both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);

struct ModPFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity = 1;
  friend bool operator==(const ModPFactor&, const ModPFactor&) = default;
};

/// Complete factorization f = unit * prod factor^multiplicity over F_p.
struct ModPFactorization {
  std::uint64_t p = 0;
  std::uint64_t unit = 1;
  std::vector<ModPFactor> factors;

  FpPoly product() const;
  std::string to_string() const;
};

/// Squarefree, distinct-degree and equal-degree factorization over F_p.
/// Randomized splitting draws from an RNG seeded by `seed` (and p), and the
/// result is sorted, so the output never depends on the seed.
ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed = kArtifactSeed);
ModPFactorization factor_mod_p(const FpPoly& f, std::uint64_t seed = kArtifactSeed);

/// Distinct roots of f in F_p, ascending.
std::vector<std::uint64_t> roots_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace gkc
