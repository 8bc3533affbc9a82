#pragma once

#include <vector>

#include "commlie/finite_field.hpp"

namespace commlie {

/// Polynomial over a FiniteField, lowest coefficient first, no trailing zeros.
using FFPoly = std::vector<FqElem>;

namespace ffpoly {

void trim(FFPoly& a);
int degree(const FFPoly& a);
FFPoly mul(const FiniteField& f, const FFPoly& a, const FFPoly& b);
/// Remainder of a modulo a monic b.
FFPoly rem(const FiniteField& f, const FFPoly& a, const FFPoly& b);
/// Quotient of a by a monic b when it divides exactly; returns false otherwise.
bool divides(const FiniteField& f, const FFPoly& b, const FFPoly& a, FFPoly& quotient);

/// Every monic polynomial of the given degree, coefficients drawn from the whole field
/// or only from the prime subfield, in increasing code order.
std::vector<FFPoly> monic_polys(const FiniteField& f, int degree, bool prime_subfield);

/// Monic irreducibles of degree 1..max_degree by trial division; result[d] lists degree d.
std::vector<std::vector<FFPoly>> irreducibles_up_to(const FiniteField& f, int max_degree, bool prime_subfield);

/// (−1)^deg φ · φ(−x).
FFPoly dual(const FiniteField& f, const FFPoly& phi);

}  // namespace ffpoly
}  // namespace commlie
