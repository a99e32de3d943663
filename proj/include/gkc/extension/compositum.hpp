#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkc/extension/descriptor.hpp"
#include "gkc/fields/galois_action.hpp"

namespace gkc {

/// A CM field M Galois over Q given by a defining polynomial together with
/// its Galois group. Without `automorphisms` the group and its conjugation are
/// the caller's claim; with them they are checked exactly.
struct SuppliedPiece {
  std::string name;
  NumberField field;
  GroupPtr group;
  Elem tau = 0;
  /// Generators of the square classes of all quadratic subfields of M.
  /// Absent means unknown, and disjointness must then be asserted.
  std::optional<std::vector<Integer>> square_classes;
  /// automorphisms[g](theta) is the image of theta under g.
  std::vector<QPoly> automorphisms;
  /// (d, w) with w(theta)^2 = d.
  std::vector<std::pair<Integer, QPoly>> square_roots;
};

struct PieceCheck {
  bool galois = false;          // group, action and conjugation verified
  bool square_classes = false;  // the listed classes are exactly the quadratic subfields
  std::string evidence;
};

/// Throws InvariantViolation when supplied verification data is wrong.
PieceCheck check_supplied_piece(const SuppliedPiece& piece);

struct CompositumComponent {
  enum class Kind { Quadratic, Cyclotomic, Supplied };
  Kind kind = Kind::Quadratic;
  Integer d;            // Quadratic: Q(sqrt d)
  std::uint64_t m = 0;  // Cyclotomic: Q(zeta_m)
  std::shared_ptr<const SuppliedPiece> piece;

  static CompositumComponent quadratic(const Integer& d);
  static CompositumComponent cyclotomic(std::uint64_t m);
  static CompositumComponent supplied(std::shared_ptr<const SuppliedPiece> piece);
  std::string label() const;
  bool is_real() const;
};

/// The Q8 field X^8 + 24X^6 + 144X^4 + 288X^2 + 144, that is
/// Q(sqrt(-(2+sqrt 2)(3+sqrt 3))), with its eight automorphisms and square
/// roots of 2 and 3 as verification data.
std::shared_ptr<const SuppliedPiece> q8_piece();

/// Minimal polynomial of sqrt(d_1) + ... + sqrt(d_k) (X when k = 0).
IntPoly multiquadratic_polynomial(const std::vector<Integer>& ds);

/// K = M * Q(sqrt d_1, ..., sqrt d_k) over R = Q(sqrt d_1, ..., sqrt d_k) with
/// exactly one non-real component M. Throws RamifiedPrime,
/// NotLinearlyDisjoint, UndeterminedDecomposition.
ExtensionDescriptor build_compositum_over_Q(const std::vector<CompositumComponent>& components, std::uint64_t p,
                                            bool assume_disjoint = false);

/// Square-class bookkeeping: true iff the classes are independent in
/// Q^x / (Q^x)^2 (each input is reduced to its squarefree part).
bool square_classes_independent(const std::vector<Integer>& classes);

}  // namespace gkc
