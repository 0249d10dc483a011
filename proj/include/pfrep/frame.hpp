// frame.hpp — Pfaffian representations from a projective frame of surface
// points.
//
// A fixed 5x5 skew matrix of linear forms (t_frame_matrix) has the property
// that its five sub-Pfaffians all vanish on the five standard frame points
// e1..e4, [1:1:1:1]. Moving an arbitrary frame of points on a cubic surface
// onto the standard one by a projectivity and solving a linear system for the
// bordering forms yields a 6x6 matrix whose Pfaffian is the surface equation.
#pragma once

#include "pfrep/skewmat.hpp"

#include <optional>

namespace pfrep {

// the distinguished 5x5 skew matrix of linear forms
SkewLinearMatrix t_frame_matrix(const FieldPtr& f);
// its 3x3 companion used for quadric surfaces
SkewLinearMatrix t_prime_matrix(const FieldPtr& f);
// the standard frame: e1, e2, e3, e4, [1:1:1:1]
const std::vector<ProjPoint>& standard_frame_points();

struct FrameSystem {
    Mat A;                        // 20 x 20: unknown form coefficients, (form, variable) lex
    std::vector<AN> rhs;          // cubic coefficient vector of the surface
    SkewLinearMatrix T;           // the moved 5x5 block (frame matrix composed with the
                                  // projectivity sending the frame to the standard points)
    std::vector<MultiPoly> subpf; // its five sub-Pfaffians
    Mat projectivity;             // the matrix realizing that move
    Mat frame_matrix;             // its exact inverse: standard points -> the frame
};

// Build the linear system asking for forms L0..L4 with
//   sum_i (-1)^i L_i * subpf_i = F.
// pts: five points in general position (they need not lie on F here).
FrameSystem build_frame_system(const MultiPoly& F, const std::vector<ProjPoint>& pts);

struct FrameRep {
    SkewLinearMatrix M;           // 6x6 with Pf(M) = constant * F
    AN constant;                  // always 1 for this construction
    std::vector<MultiPoly> forms; // the bordering forms actually used
    FrameSystem system;           // the solved system (kernel gives the family)
};

// Full frame construction: checks the points lie on F and are in general
// position, solves for the bordering forms (free variables zero), and
// optionally shifts the solution by a kernel combination with the five given
// family coefficients.
FrameRep represent_with_frame(const MultiPoly& F, const std::vector<ProjPoint>& pts,
                              const std::optional<std::vector<Rat>>& family = std::nullopt);

} // namespace pfrep
