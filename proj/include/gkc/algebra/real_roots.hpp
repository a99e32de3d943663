#pragma once

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

bool is_squarefree(const IntPoly& f);
/// f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// Number of distinct real roots of a squarefree f, by Sturm's theorem.
/// Throws NotSquarefree if gcd(f, f') is nonconstant.
unsigned count_real_roots(const IntPoly& f);

}  // namespace gkc
