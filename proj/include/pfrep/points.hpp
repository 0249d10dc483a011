// points.hpp — finding and growing rational (or small-extension) points on a
// cubic surface.
//
// All searches are deterministic. Integer data is drawn from TupleEnumerator
// (height shells, lexicographic within a shell); every surface point produced
// by a chord or tangent construction is kept in canonical projective form, so
// identical inputs yield identical outputs everywhere.
#pragma once

#include "pfrep/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfrep {

// Endless enumeration of primitive integer n-tuples: increasing height (max
// absolute entry), lexicographic within a height shell, gcd 1, first nonzero
// entry positive.
class TupleEnumerator {
public:
    explicit TupleEnumerator(int n);
    std::vector<Int> next();

private:
    int n_;
    long h_;
    std::vector<long> cur_;
    bool fresh_;
    bool advance();
};

// all four partial derivatives vanish at p (for a cubic this forces p onto
// the surface)
bool is_singular_point(const MultiPoly& F, const ProjPoint& p);

// p must be a smooth point of V(F): true when the tangent-plane section of
// the surface at p degenerates into three lines
bool is_t_point(const MultiPoly& F, const ProjPoint& p);

// Candidate supply for the point search. Default: deterministic enumeration
// inside each search plane. Injected: a fixed list of P^3 points consumed in
// order with no fallback; a head candidate that does not lie on the current
// search plane skips that plane without being consumed.
class CandidateQueue {
public:
    CandidateQueue() = default;
    explicit CandidateQueue(std::vector<ProjPoint> injected);
    bool injected() const { return injected_.has_value(); }
    const ProjPoint* peek() const; // nullptr when exhausted (injected mode)
    void consume();

private:
    std::optional<std::vector<ProjPoint>> injected_;
    size_t next_ = 0;
};

enum class Verdict {
    accepted,
    same_direction,    // candidate is the base point itself
    polar_vanishes,    // first polar of the base at the candidate is zero
    back_to_start,     // constructed point equals the base point
    singular_point,    // constructed point is singular on the surface
    t_point,           // tangent section at the constructed point degenerates
    dependent_points,  // constructed point linearly dependent with chosen ones
    tangent_forbidden, // tangent plane there passes through a forbidden point
    plane_skipped,     // injected candidate not on the search plane
};
const char* verdict_name(Verdict v);

struct SearchEvent {
    int plane_index = 0;
    std::vector<AN> plane;               // coefficients of the search plane
    std::optional<ProjPoint> candidate;  // the y that was drawn
    Verdict verdict = Verdict::accepted;
    std::optional<ProjPoint> result;     // the constructed point, when one exists
};

struct SearchLog {
    std::vector<SearchEvent> events;
};

struct StepConstraints {
    // reject a constructed point that is linearly dependent with any group
    std::vector<std::vector<ProjPoint>> independence;
    // reject a constructed point whose tangent plane contains any of these
    std::vector<ProjPoint> tangent_avoid;
};

// One chord step: from the point a on V(F), draw candidates y on the tangent
// plane at a (or, for singular a, on successively enumerated planes through
// a), and return the third intersection of the line a-y with the surface,
// subject to the rejection rules above plus smoothness and the T-point test.
// cap bounds both the candidates tried per plane and the number of planes.
ProjPoint next_point(const MultiPoly& F, const ProjPoint& a, const StepConstraints& cons,
                     int cap, CandidateQueue& queue, SearchLog* log);

// Grow a1 into five points of V(F) in general position, rejecting T-points
// and singular points for the four constructed ones. Throws TPointStart when
// a1 is a smooth T-point, SearchExhausted when a step runs out of candidates.
std::vector<ProjPoint> extend_to_frame(const MultiPoly& F, const ProjPoint& a1, int cap,
                                       CandidateQueue& queue, SearchLog* log);

// A surface point together with the surface moved to the point's field (the
// two coincide unless an extension had to be adjoined).
struct FoundPoint {
    ProjPoint point;
    MultiPoly surface;
};

// A surface point usable as a starting point: scans plane-pair lines for
// same-field points, falling back to a root of a remembered irreducible cubic
// (preferred, for its odd degree) or quadratic line section. Smooth T-points
// are passed over.
FoundPoint find_point(const MultiPoly& F);

// Five points on a ternary cubic with every triple linearly independent,
// grown from rational line sections by chord and tangent constructions.
std::vector<ProjPoint> plane_cubic_points(const MultiPoly& C);

} // namespace pfrep
