#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

struct Signature {
  int r1 = 0;  // real embeddings
  int r2 = 0;  // pairs of complex embeddings
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Q[X]/(f) for a monic irreducible integral f. Equality is identity of the
/// defining polynomial.
class NumberField {
 public:
  const IntPoly& defining_poly() const { return f_; }
  int degree() const { return f_.degree(); }
  const Signature& signature() const { return sig_; }
  const Integer& poly_disc() const { return disc_; }
  bool totally_real() const { return sig_.r2 == 0; }
  bool totally_imaginary() const { return sig_.r1 == 0; }
  /// How irreducibility was established ("irreducible mod 7", "cyclotomic", ...).
  const std::string& irreducibility_reason() const { return reason_; }
  /// True when irreducibility was supplied by the caller rather than checked.
  bool irreducibility_asserted() const { return asserted_; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.f_ == b.f_; }

 private:
  friend NumberField make_field(const IntPoly&);
  friend NumberField make_field_known_irreducible(const IntPoly&, std::string, bool);
  IntPoly f_;
  Signature sig_;
  Integer disc_;
  std::string reason_;
  bool asserted_ = false;
};

/// Validates irreducibility (see decide_irreducibility), then computes the
/// signature and the polynomial discriminant. Throws NotMonic, Reducible,
/// IrreducibilityUndecided.
NumberField make_field(const IntPoly& f);

/// For polynomials whose irreducibility follows from structure the mod-p
/// tests cannot see (cyclotomic polynomials, multiquadratic composita) or is
/// supplied by the caller. `asserted` marks caller-supplied claims.
NumberField make_field_known_irreducible(const IntPoly& f, std::string reason, bool asserted);

/// Q(zeta_m) with defining polynomial Phi_m.
NumberField cyclotomic_field(std::uint64_t m);
/// Q(sqrt d) via X^2 - d, d not a square.
NumberField quadratic_field(const Integer& d);

struct SplittingType {
  std::uint64_t p = 0;
  /// (e, f) pairs, sorted ascending.
  std::vector<std::pair<unsigned, unsigned>> entries;
  bool certified = true;

  unsigned field_degree() const;
  bool totally_split() const;
  bool unramified() const;
  std::string to_string() const;
};

/// Prime decomposition of p in F by Dedekind's theorem. Throws UnsafePrime
/// when Dedekind's criterion shows p divides [O_F : Z[theta]].
SplittingType splitting_type(const NumberField& F, std::uint64_t p);
bool is_totally_split(const NumberField& F, std::uint64_t p);

}  // namespace gkc
