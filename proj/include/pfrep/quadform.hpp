// quadform.hpp — quadratic forms: Gram matrices, rank, splitting into lines.
//
// Rank decides reducibility questions exactly (characteristic 0): a quadric
// surface/conic is irreducible iff its Gram rank is at least 3, a repeated
// linear factor shows up as rank 1, a pair of distinct planes as rank 2.
#pragma once

#include "pfrep/extension.hpp"
#include "pfrep/multipoly.hpp"

#include <optional>

namespace pfrep {

// symmetric 4x4 Gram matrix (cross coefficients halved); form must be
// homogeneous of degree 2 (or zero)
Mat gram_matrix(const MultiPoly& Q);

int quadric_rank(const MultiPoly& Q);

struct QuadricFactors {
    FieldPtr field;     // field the factors live over
    bool extended;      // true when a quadratic extension was needed
    FieldExtension ext; // valid when extended; embeds the input field
    AN scale;           // Q = scale * l1 * l2
    MultiPoly l1, l2;   // equal to each other when the rank is 1
};

// Factor a rank-1 or rank-2 quadratic form into two linear forms. Returns
// nullopt when the form stays irreducible over its own field and
// allow_extension is false; throws on rank 0 or rank >= 3.
std::optional<QuadricFactors> split_low_rank_quadric(const MultiPoly& Q, bool allow_extension);

// coefficient-wise embedding of a polynomial along a field extension
MultiPoly embed_multipoly(const FieldExtension& ext, const MultiPoly& p);

} // namespace pfrep
