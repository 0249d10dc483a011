// ternary.hpp — plane cubic curves (forms in x0, x1, x2).
//
// The key decision procedure here is total reducibility: whether a ternary
// cubic is a product of three linear forms over the algebraic closure. After
// stripping repeated factors (which already force total reducibility of a
// cubic), this reduces to a Hessian proportionality test: a squarefree cubic
// is a triangle of lines iff its Hessian determinant is a constant multiple of
// the cubic itself (zero included, for three concurrent lines).
#pragma once

#include "pfrep/multipoly.hpp"

namespace pfrep {

// determinant of the 3x3 Hessian of a ternary form
MultiPoly hessian3(const MultiPoly& C);

// squarefree part of a nonzero ternary cubic (up to a nonzero constant)
MultiPoly squarefree_part3(const MultiPoly& C);

// the ternary cubic splits into three linear forms over the closure
bool totally_reducible3(const MultiPoly& C);

// section of a quaternary form by the plane pi.x = 0: the restricted form in
// x0..x2 together with the 4x3 basis parametrizing the plane
struct PlaneSection {
    MultiPoly poly;
    Mat basis;
};
PlaneSection restrict_to_plane(const MultiPoly& F, const std::vector<AN>& pi);

} // namespace pfrep
