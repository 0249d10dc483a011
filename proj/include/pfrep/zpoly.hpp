// zpoly.hpp — dense integer/rational univariate polynomials and factorization
// over the integers (Zassenhaus: squarefree split, factorization mod p,
// quadratic Hensel lifting, subset recombination).
//
// This layer knows nothing about number fields; coefficients are plain Int/Rat.
// Polynomials are coefficient vectors ordered by ascending degree and trimmed
// (no trailing zeros); the zero polynomial is the empty vector.
#pragma once

#include "pfrep/rational.hpp"

#include <utility>
#include <vector>

namespace pfrep {

using ZPoly = std::vector<Int>; // ascending degree, trimmed
using QPolyV = std::vector<Rat>;

int zp_deg(const ZPoly& f); // -1 for zero
void zp_trim(ZPoly& f);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_derivative(const ZPoly& f);
Int zp_content(const ZPoly& f);          // gcd of coefficients, sign of leading coeff
ZPoly zp_primitive(const ZPoly& f);      // f / content
bool zp_divides(const ZPoly& d, const ZPoly& f, ZPoly* quot); // exact division over Z
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b); // primitive gcd via subresultant PRS

// Primitive part of a rational polynomial: clears denominators, strips content,
// makes the leading coefficient positive. Returns the matching scalar c with
// f = c * result.
ZPoly zq_primitive_part(const QPolyV& f, Rat* scalar);

// Irreducible factorization of a nonzero rational polynomial:
//   f = constant * prod_i fact[i].first ^ fact[i].second
// with each factor primitive integer, irreducible over Q, positive leading
// coefficient, ordered by (degree, coefficient tuple). Deterministic.
struct ZFactorization {
    Rat constant;
    std::vector<std::pair<ZPoly, int>> factors;
};
ZFactorization zq_factor(const QPolyV& f);

bool zq_is_irreducible(const QPolyV& f); // degree >= 1 and a single factor

} // namespace pfrep
