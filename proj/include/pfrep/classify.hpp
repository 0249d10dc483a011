// classify.hpp — structural classification of a quaternary cubic form:
// irreducible (cone or not), a plane plus an irreducible quadric, or three
// planes (with multiplicities), over the smallest field extension that
// exposes the split.
#pragma once

#include "pfrep/extension.hpp"
#include "pfrep/multipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pfrep {

// Splitting of a cubic form into linear pieces as far as possible. An empty
// plane list means the form is irreducible over every field we would try
// (its own field, plus the one extension a factorization could live in).
struct CubicFactors {
    FieldPtr field; // where all the pieces below live
    AN constant;    // F = constant * product(planes^mult) * quadric
    std::vector<std::pair<MultiPoly, int>> planes; // normalized linear forms
    std::optional<MultiPoly> quadric;              // irreducible quadric factor
    // embeddings taking the input field to `field`, in application order
    std::vector<FieldExtension> chain;
};

// Factor a nonzero homogeneous cubic in x0..x3. Linear factors are
// normalized (first nonzero coefficient 1); a quadric factor is normalized
// on its leading coefficient. At most one field extension is adjoined, of
// degree 2, 3 or 6 over the input field.
CubicFactors linear_factors(const MultiPoly& F);

// Vertex of the cone V(F), i.e. a point v with sum_i v_i dF/dx_i = 0
// identically; nullopt when the form is not a cone.
std::optional<ProjPoint> cone_vertex(const MultiPoly& F);

enum class SurfaceKind {
    irreducible,       // irreducible, not a cone
    cone,              // irreducible cone over a plane cubic
    plane_and_quadric, // linear form times an irreducible quadric
    three_planes,      // product of three linear forms (with multiplicity)
};
const char* surface_kind_name(SurfaceKind k);

struct Classification {
    SurfaceKind kind;
    CubicFactors factors;                 // planes/quadric when reducible
    std::optional<ProjPoint> cone_vertex; // set for cones
};

// Decide the structure of V(F) for a nonzero homogeneous cubic F.
Classification classify(const MultiPoly& F);

} // namespace pfrep
