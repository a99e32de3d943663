#pragma once

#include <string>
#include <vector>

#include "gkc/fields/number_field.hpp"
#include "gkc/groups/finite_group.hpp"

namespace gkc {

/// Polynomial with rational coefficients, constant term first.
using QPoly = std::vector<Rational>;

QPoly to_qpoly(const IntPoly& f);
/// a mod f for monic f, trimmed.
QPoly reduce_mod(QPoly a, const IntPoly& f);
QPoly mul_mod(const QPoly& a, const QPoly& b, const IntPoly& f);
/// outer(inner(X)) mod f.
QPoly compose_mod(const QPoly& outer, const QPoly& inner, const IntPoly& f);
QPoly parse_qpoly(const std::vector<std::string>& coefficients);

/// Exact check that `maps[g]` is the polynomial of an automorphism of
/// F = Q[X]/(f) for every g in G and that composition realizes the group law:
/// the automorphism of a*b sends theta to maps[b](maps[a](theta)). F must have
/// checked (not asserted) irreducibility and degree |G|. Throws
/// InvariantViolation naming the first failure.
void verify_galois_action(const NumberField& F, const FiniteGroup& G, const std::vector<QPoly>& maps);

/// True when f(X) = m(-X^2) and every root of f is purely imaginary, so complex
/// conjugation acts as theta -> -theta in every embedding.
bool conjugation_is_negation(const IntPoly& f);

/// Exact check that w^2 = d in Q[X]/(f).
bool is_square_root_mod(const QPoly& w, const Integer& d, const IntPoly& f);

}  // namespace gkc
