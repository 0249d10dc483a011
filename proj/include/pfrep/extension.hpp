// extension.hpp — adjoining a root of an irreducible polynomial to a field.
//
// Towers are flattened eagerly: extending K = Q(alpha) by a root of p of
// degree d produces a single absolute field L = Q(gamma) of degree
// [K:Q]*d, with gamma = u + k*alpha a primitive element (k found by search),
// plus the data needed to move between K and L.
#pragma once

#include "pfrep/unipoly.hpp"

namespace pfrep {

struct FieldExtension {
    FieldPtr base;  // the field the polynomial lived over
    FieldPtr field; // the (absolute) extension containing a root
    AN alpha_image; // image in `field` of the generator of `base`
    AN root;        // a root in `field` of the defining polynomial

    // Embed an element of `base` (or of Q) into `field`.
    AN embed(const AN& a) const;
    // Coefficient-wise embedding of a polynomial over `base`.
    UniPoly embed_poly(const UniPoly& p) const;
};

// p: nonzero polynomial over some field K, irreducible over K (degree 1 is
// allowed and returns K itself). Throws ReducibleModulus when p turns out not
// to be irreducible over K, DegreeCapExceeded when deg(p)*[K:Q] > 12.
FieldExtension extend_field(const UniPoly& p);

} // namespace pfrep
