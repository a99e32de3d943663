#pragma once

#include <vector>

#include "gkc/algebra/cyclotomic.hpp"
#include "gkc/groups/finite_group.hpp"

namespace gkc {

/// Class function on G, one value per conjugacy class. Values live in
/// Q(zeta_e) with e = exponent(G).
struct Character {
  GroupPtr group;
  std::vector<CycNumber> values;

  CycNumber at(Elem x) const { return values[group->class_of(x)]; }
  /// chi(1) as an integer; throws InvalidArgument if not a positive integer.
  unsigned degree() const;
  bool is_trivial() const;
  /// Complex-conjugate character.
  Character contragredient() const;
  /// Galois conjugate under zeta_e -> zeta_e^a.
  Character galois(std::uint64_t a) const;
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// Complete irreducible table. Abelian groups via the dual group, D_n and Q8
/// in closed form, everything else by Burnside-Dixon over F_q lifted to exact
/// values and checked by orthogonality. Rows sorted by degree, then by values
/// in descending lexicographic order. Throws ScaleExceeded for |G| > 64.
std::vector<Character> character_table(const GroupPtr& G);

/// Burnside-Dixon route regardless of the group kind (also used as an oracle).
std::vector<Character> dixon_character_table(const GroupPtr& G);

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)).
Rational inner_product(const Character& a, const Character& b);

enum class Parity { Even, Odd };
/// Throws TauNotCentralInvolution.
Parity parity(const Character& chi, Elem tau);
/// Odd irreducible characters (those with chi(tau) = -chi(1)).
std::vector<Character> odd_characters(const std::vector<Character>& table, Elem tau);

/// dim V_chi^H = (1/|H|) sum_{h in H} chi(h). Throws NotASubgroup, and
/// NonIntegralDimension if the average is not a nonnegative integer.
unsigned fixed_dim(const Character& chi, const Subset& H);

/// Values of chi restricted to H, in the order of H.
std::vector<CycNumber> restrict_to(const Character& chi, const Subset& H);

/// Ind_H^G of a class function on H given by values parallel to H.
Character induced_character(const GroupPtr& G, const Subset& H, const std::vector<CycNumber>& values_on_H);
/// Ind_H^G 1_H.
Character induced_trivial(const GroupPtr& G, const Subset& H);

/// Group-algebra element: one coefficient per group element.
struct GroupAlgebraElement {
  GroupPtr group;
  std::vector<CycNumber> coeffs;
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.coeffs == b.coeffs; }
};
using Idempotent = GroupAlgebraElement;

/// e_chi with coefficient chi(1)/|G| * chi(sigma^-1) at sigma.
Idempotent idempotent(const Character& chi);
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
bool is_zero(const GroupAlgebraElement& a);

}  // namespace gkc
