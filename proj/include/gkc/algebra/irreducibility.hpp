#pragma once

#include <string>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

/// How irreducibility over Q was established (or refuted).
struct IrreducibilityCertificate {
  bool irreducible = false;
  /// e.g. "irreducible mod 7", "degree patterns mod 3,5,11", "rational root 1".
  std::string reason;
  std::vector<std::uint64_t> primes;
};

/// Decides irreducibility of a monic f over Q. Cheap tests first: a repeated
/// factor or rational root, irreducibility mod some p not dividing disc(f),
/// disjoint admissible factor degrees across mod-p patterns. Otherwise the
/// factorization mod the prime with fewest factors is Hensel-lifted past the
/// Landau-Mignotte bound and every recombination of at most half the factors
/// is trial-divided. Throws IrreducibilityUndecided only when that prime
/// leaves more than `max_recombination_factors` factors; NotMonic on
/// non-monic input.
IrreducibilityCertificate decide_irreducibility(const IntPoly& f, std::size_t max_recombination_factors = 20);

/// Rational (hence integer) roots of a monic f, ascending. Empty when the
/// constant term is too large to enumerate divisors; `complete` reports that.
std::vector<Integer> integer_roots(const IntPoly& f, bool* complete = nullptr);

}  // namespace gkc
