// test_points.cpp — deterministic point enumeration, the tangent-section
// degeneration test, chord steps with injected candidates, frame growth, and
// starting-point search.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/points.hpp"
#include "pfrep/ternary.hpp"

#include <functional>
#include <set>

using namespace pfrep;

namespace {

const MultiPoly& running_example() {
    static const MultiPoly F = MultiPoly::parse("x0*x1^2 + x1*x3^2 + x2^3");
    return F;
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::internal;
}

ProjPoint pt(std::vector<long> v) { return ProjPoint::of_ints(v); }

} // namespace

TEST_CASE("tuple enumeration: frozen prefix and invariants") {
    TupleEnumerator e(3);
    CHECK(e.next() == std::vector<Int>{0, 0, 1});
    CHECK(e.next() == std::vector<Int>{0, 1, -1});
    CHECK(e.next() == std::vector<Int>{0, 1, 0});
    CHECK(e.next() == std::vector<Int>{0, 1, 1});
    CHECK(e.next() == std::vector<Int>{1, -1, -1});

    TupleEnumerator f(4);
    std::set<std::vector<Int>> seen;
    Int prev_height = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<Int> t = f.next();
        REQUIRE(t.size() == 4);
        Int height = 0, g = 0, first = 0;
        bool found = false;
        for (const Int& v : t) {
            height = std::max(height, Int(abs(v)));
            g = gcd(g, v);
            if (!found && v != 0) {
                first = v;
                found = true;
            }
        }
        CHECK(g == 1);
        CHECK(first > 0);
        CHECK(height >= prev_height); // heights never decrease
        prev_height = height;
        CHECK(seen.insert(t).second); // no repeats
    }
}

TEST_CASE("singular points are exactly the common zeros of the gradient") {
    const MultiPoly& F = running_example();
    CHECK(is_singular_point(F, pt({1, 0, 0, 0})));
    CHECK(!is_singular_point(F, pt({0, 1, 0, 0})));
    CHECK(!is_singular_point(F, pt({0, -1, 1, 1})));
    MultiPoly cone = MultiPoly::parse("x1^2*x2 - x0^3 + 2*x2^3");
    CHECK(is_singular_point(cone, pt({0, 0, 0, 1}))); // the vertex
}

TEST_CASE("tangent-section degeneration at special points") {
    // a surface whose tangent sections along two coordinate lines degenerate
    MultiPoly S = MultiPoly::parse("x0^2*x2 + x1^2*x3");
    CHECK(is_t_point(S, pt({1, 2, 0, 0})));
    CHECK(is_t_point(S, pt({1, 3, 0, 0})));
    CHECK(is_t_point(S, pt({1, 0, 0, 2})));
    CHECK(is_t_point(S, pt({0, 1, 5, 0})));
    // generic points of the same surface do not degenerate
    CHECK(!is_t_point(S, pt({1, 1, -1, 1})));
    CHECK(!is_t_point(S, pt({1, 2, -4, 1})));
    CHECK(!is_t_point(S, pt({1, 2, -8, 2})));

    // classical degenerate tangent point of a smooth surface
    MultiPoly E = MultiPoly::parse("x0*x1*x3 + x2^3 + x2*x3^2");
    CHECK(is_t_point(E, pt({0, 0, 0, 1})));
    MultiPoly fermat = MultiPoly::parse("x0^3 + x1^3 + x2^3 + x3^3");
    CHECK(is_t_point(fermat, pt({1, -1, 0, 0})));

    // a surface with no degenerate tangent sections at a sampled family
    MultiPoly T = MultiPoly::parse("x0^2*x3 + x0*x1*x2 + x1^3");
    for (long s = -2; s <= 2; ++s)
        for (long t = 1; t <= 2; ++t)
            CHECK(!is_t_point(T, pt({1, s, t, -s * s * s - s * t})));

    // the test refuses singular points
    CHECK(code_of([&] { is_t_point(running_example(), pt({1, 0, 0, 0})); }) ==
          errc::singular_point);
}

TEST_CASE("total reducibility of ternary cubics") {
    // products of three lines, in every shape
    CHECK(totally_reducible3(MultiPoly::parse("x0*x1*x2")));              // triangle
    CHECK(totally_reducible3(MultiPoly::parse("x0^2*x1 + x0*x1^2")));     // concurrent
    CHECK(totally_reducible3(MultiPoly::parse("x0^3")));                  // triple line
    CHECK(totally_reducible3(MultiPoly::parse("x0^2*x1")));               // double + line
    CHECK(totally_reducible3(MultiPoly::parse("x0^2*x2 - 2*x1^2*x2")));   // needs sqrt(2)
    CHECK(totally_reducible3(MultiPoly::parse("x0^3 - 6*x0*x1*x2 + 2*x1^3 + 4*x2^3"))); // norm form

    // line times irreducible conic
    CHECK(!totally_reducible3(MultiPoly::parse("x0*x1*x2 - x2^3")));
    CHECK(!totally_reducible3(MultiPoly::parse("x0^3 + x0*x1^2 + x0*x2^2")));
    // irreducible cubics: smooth, nodal, cuspidal
    CHECK(!totally_reducible3(MultiPoly::parse("x0^3 + x1^3 + x2^3")));
    CHECK(!totally_reducible3(MultiPoly::parse("x1^2*x2 - x0^3 + 2*x2^3")));
    CHECK(!totally_reducible3(MultiPoly::parse("x1^2*x2 - x0^3 - x0^2*x2")));
    CHECK(!totally_reducible3(MultiPoly::parse("x1^2*x2 - x0^3")));
}

TEST_CASE("plane sections restrict through an explicit basis") {
    const MultiPoly& F = running_example();
    FieldPtr q = NumberField::rationals();
    std::vector<AN> pi{AN(Rat(1)), AN(Rat(0)), AN(Rat(0)), AN(Rat(0))}; // x0 = 0
    PlaneSection sec = restrict_to_plane(F, pi);
    REQUIRE(sec.basis.rows() == 4);
    REQUIRE(sec.basis.cols() == 3);
    // substituting the basis columns into F reproduces the section
    CHECK(sec.poly == F.substituted(sec.basis));
    // the section of x0*x1^2 + x1*x3^2 + x2^3 by x0 = 0 keeps only the last terms
    CHECK(!sec.poly.is_zero());
    CHECK(sec.poly.is_homogeneous(3));
}

TEST_CASE("chord replay from a fixed candidate list reproduces the frame") {
    const MultiPoly& F = running_example();
    CandidateQueue queue(std::vector<ProjPoint>{pt({1, 1, 0, 0}), pt({0, 0, 1, 1}),
                                                pt({5, 0, -1, 1}), pt({40, 2, -2, 2})});
    SearchLog log;
    std::vector<ProjPoint> frame = extend_to_frame(F, pt({1, 0, 0, 0}), 100, queue, &log);
    REQUIRE(frame.size() == 5);
    CHECK(frame[0] == pt({1, 0, 0, 0}));
    CHECK(frame[1] == pt({0, 1, 0, 0}));
    CHECK(frame[2] == pt({0, -1, 1, 1}));
    CHECK(frame[3] == pt({-10, 1, 1, -3}));
    CHECK(frame[4] == pt({95, 1, -6, 11}));
    for (const ProjPoint& p : frame) CHECK(F.eval(p.coords()).is_zero());
    CHECK(general_position(frame));

    int accepted = 0;
    for (const SearchEvent& ev : log.events)
        if (ev.verdict == Verdict::accepted) ++accepted;
    CHECK(accepted == 4);
}

TEST_CASE("default enumeration grows a frame without candidates supplied") {
    const MultiPoly& F = running_example();
    CandidateQueue queue;
    SearchLog log;
    std::vector<ProjPoint> frame = extend_to_frame(F, pt({1, 0, 0, 0}), 10000, queue, &log);
    REQUIRE(frame.size() == 5);
    for (const ProjPoint& p : frame) CHECK(F.eval(p.coords()).is_zero());
    CHECK(general_position(frame));
    for (size_t i = 1; i < 5; ++i) {
        CHECK(!is_singular_point(F, frame[i]));
        CHECK(!is_t_point(F, frame[i]));
    }
}

TEST_CASE("a starting point at a degenerate tangent section is refused") {
    MultiPoly E = MultiPoly::parse("x0*x1*x3 + x2^3 + x2*x3^2");
    CandidateQueue queue;
    CHECK(code_of([&] { extend_to_frame(E, pt({0, 0, 0, 1}), 100, queue, nullptr); }) ==
          errc::t_point_start);
}

TEST_CASE("an exhausted candidate list aborts the search with a log trail") {
    const MultiPoly& F = running_example();
    CandidateQueue queue(std::vector<ProjPoint>{pt({1, 1, 0, 0})});
    SearchLog log;
    CHECK(code_of([&] { extend_to_frame(F, pt({1, 0, 0, 0}), 100, queue, &log); }) ==
          errc::search_exhausted);
    REQUIRE(!log.events.empty());
    CHECK(log.events.front().verdict == Verdict::accepted); // the one good step
}

TEST_CASE("chord steps respect independence and tangent constraints") {
    const MultiPoly& F = running_example();
    // constructing [0:1:0:0] from [1:0:0:0] is blocked when [0:1:0:0] is
    // already in an independence group of size one
    StepConstraints cons;
    cons.independence = {{pt({0, 1, 0, 0})}};
    CandidateQueue queue(std::vector<ProjPoint>{pt({1, 1, 0, 0}), pt({0, 0, 1, 1})});
    SearchLog log;
    ProjPoint p = next_point(F, pt({1, 0, 0, 0}), cons, 100, queue, &log);
    CHECK(p == pt({0, -1, 1, 1})); // the second candidate's chord point
    bool saw_dependent = false;
    for (const SearchEvent& ev : log.events)
        if (ev.verdict == Verdict::dependent_points) saw_dependent = true;
    CHECK(saw_dependent);
}

TEST_CASE("starting points are found on the surface in small fields") {
    for (const char* text :
         {"x0*x1^2 + x1*x3^2 + x2^3", "x0^3 + x1^3 + x2^3 + x3^3",
          "2*x0^3 + 3*x1^3 + 5*x2^3 + 7*x3^3", "x0^2*x3 + x0*x1*x2 + x1^3"}) {
        MultiPoly F = MultiPoly::parse(text);
        FoundPoint fp = find_point(F);
        CHECK(fp.surface.eval(fp.point.coords()).is_zero());
        CHECK(fp.point.field()->degree() <= 3);
        CHECK(fp.surface.field()->same(*fp.point.field()));
        if (!is_singular_point(fp.surface, fp.point))
            CHECK(!is_t_point(fp.surface, fp.point));
    }
}

TEST_CASE("five points on a plane cubic with independent triples") {
    MultiPoly C = MultiPoly::parse("x1^2*x2 - x0^3 + 2*x2^3");
    std::vector<ProjPoint> pts = plane_cubic_points(C);
    REQUIRE(pts.size() == 5);
    for (const ProjPoint& p : pts) {
        REQUIRE(p.dim() == 3);
        CHECK(C.eval(p.coords()).is_zero());
    }
    FieldPtr f = pts[0].field();
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            for (size_t k = j + 1; k < 5; ++k) {
                Mat m(3, 3, f);
                std::vector<size_t> idx{i, j, k};
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        m.at(r, c) = pts[idx[static_cast<size_t>(c)]].coords()[static_cast<size_t>(r)];
                CHECK(!det_by_cofactors(m).is_zero());
            }
}
