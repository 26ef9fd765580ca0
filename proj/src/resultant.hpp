#pragma once

#include <vector>

#include "intpoly.hpp"

namespace batlas {

// Resultants via Sylvester matrices with fraction-free (Bareiss) elimination.
//
// Sign convention used throughout:  res(f, g) = lc(g)^deg(f) * prod f(b) over
// the roots b of g, so res(t - a, t - b) = b - a.

// Both arguments are ordinary polynomials in t (low_exp >= 0), not both constant.
BigInt resultant_int(const IntPoly& f, const IntPoly& g);

// Polynomials in a second variable whose coefficients are IntPoly in t,
// ascending by exponent. The resultant is taken in the second variable.
IntPoly resultant_poly(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g);

}  // namespace batlas
