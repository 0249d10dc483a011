// special.hpp — 6x6 Pfaffian representations for every kind of cubic surface:
// the frame construction for irreducible surfaces, a lifted plane-cubic frame
// for cones, and direct assemblies for the two reducible shapes.
#pragma once

#include "pfrep/classify.hpp"
#include "pfrep/frame.hpp"
#include "pfrep/points.hpp"

#include <optional>
#include <vector>

namespace pfrep {

struct Representation {
    SurfaceKind kind;
    FieldPtr field;     // where the matrix entries live
    SkewLinearMatrix M; // 6x6 skew matrix of linear forms
    AN constant;        // Pf(M) = constant * F, with F moved into `field`
    std::vector<ProjPoint> frame;         // frame points, when a frame was built
    std::optional<ProjPoint> cone_vertex; // set for cones
    SearchLog log;                        // chord-search provenance (may be empty)
};

struct RepresentOptions {
    int cap = 10000;                              // budget per chord-search step
    std::optional<std::vector<ProjPoint>> inject; // forced chord candidates
    std::optional<std::vector<Rat>> family;       // kernel shift of the bordering forms
    SearchLog* log_sink = nullptr; // receives chord-search events even when the
                                   // search throws (provenance for failures)
};

// Irreducible and not a cone: frame construction from a given or discovered
// surface point.
Representation represent_irreducible(const MultiPoly& F, const std::optional<ProjPoint>& start,
                                     const RepresentOptions& opt = {});

// Irreducible cone: frame construction over the base plane cubic, lifted
// along the ruling and mapped back.
Representation represent_cone(const MultiPoly& F, const ProjPoint& vertex);

// Product of three (not necessarily distinct) planes.
Representation represent_three_planes(const MultiPoly& F, const CubicFactors& cf);

// Plane times an irreducible quadric.
Representation represent_plane_quadric(const MultiPoly& F, const CubicFactors& cf);

// Classify and dispatch to the fitting construction.
Representation represent_any(const MultiPoly& F, const std::optional<ProjPoint>& start,
                             const RepresentOptions& opt = {});

// Exact re-check Pf(M) = c * F; throws VerificationFailed when it fails.
void verify_representation(const SkewLinearMatrix& M, const MultiPoly& F, const AN& c);

} // namespace pfrep
