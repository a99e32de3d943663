#pragma once

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

/// Res(a, b) by the subresultant algorithm; 0 if either input is zero.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(n(n-1)/2) Res(f, f') for monic nonconstant f. Throws NotMonic.
Integer poly_discriminant(const IntPoly& f);

}  // namespace gkc
