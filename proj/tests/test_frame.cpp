// test_frame.cpp — frame-based Pfaffian construction: the fixed 5x5 template,
// the 20x20 bordering system, and the full representation with family shifts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/frame.hpp"

#include <functional>

using namespace pfrep;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

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

std::vector<ProjPoint> frame_a() {
    return {ProjPoint::of_ints({1, 0, 0, 0}), ProjPoint::of_ints({0, 1, 0, 0}),
            ProjPoint::of_ints({0, -1, 1, 1}), ProjPoint::of_ints({-10, 1, 1, -3}),
            ProjPoint::of_ints({95, 1, -6, 11})};
}

std::vector<ProjPoint> frame_b() {
    return {ProjPoint::of_ints({1, 0, 0, 0}), ProjPoint::of_ints({0, 0, 0, 1}),
            ProjPoint::of_ints({0, -8, 2, 1}), ProjPoint::of_ints({0, 1, -1, 1}),
            ProjPoint::of_ints({1, -1, 0, 1})};
}

} // namespace

TEST_CASE("standard frame points and the fixed template") {
    const std::vector<ProjPoint>& std_pts = standard_frame_points();
    REQUIRE(std_pts.size() == 5);
    CHECK(std_pts[0] == ProjPoint::of_ints({1, 0, 0, 0}));
    CHECK(std_pts[4] == ProjPoint::of_ints({1, 1, 1, 1}));

    SkewLinearMatrix T = t_frame_matrix(Q());
    CHECK(T.at(0, 2) == MultiPoly::parse("-x3"));
    CHECK(T.at(0, 4) == MultiPoly::parse("-x2"));
    CHECK(T.at(1, 2) == MultiPoly::parse("x3"));
    CHECK(T.at(1, 3) == MultiPoly::parse("x0 - x1"));
    CHECK(T.at(1, 4) == MultiPoly::parse("x1"));
    CHECK(T.at(2, 3) == MultiPoly::parse("x1 - x3"));
    CHECK(T.at(2, 4) == MultiPoly::parse("-x1"));
    CHECK(T.at(0, 1).is_zero());
    CHECK(T.at(0, 3).is_zero());
    CHECK(T.at(3, 4).is_zero());
}

TEST_CASE("frame system: rank 15, kernel 5, projectivity inverts exactly") {
    const MultiPoly& F = running_example();
    for (const std::vector<ProjPoint>& pts : {frame_a(), frame_b()}) {
        for (const ProjPoint& p : pts) REQUIRE(F.eval(p.coords()).is_zero());
        FrameSystem sys = build_frame_system(F, pts);
        REQUIRE(sys.A.rows() == 20);
        REQUIRE(sys.A.cols() == 20);
        CHECK(sys.A.rank() == 15);
        CHECK(sys.A.kernel().cols() == 5);
        CHECK(sys.rhs == F.cubic_coeffs());

        Mat prod = sys.projectivity * sys.frame_matrix;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(prod.at(i, j) == (i == j ? AN(Rat(1)) : AN(Rat(0))));

        // the moved sub-Pfaffians cut out all five frame points
        REQUIRE(sys.subpf.size() == 5);
        for (const MultiPoly& s : sys.subpf)
            for (const ProjPoint& p : pts) CHECK(s.eval(p.coords()).is_zero());
    }
}

TEST_CASE("system matrix columns expand the signed products") {
    const MultiPoly& F = running_example();
    FrameSystem sys = build_frame_system(F, frame_a());
    const auto& mons = MultiPoly::cubic_monomials();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) {
            MultiPoly col = MultiPoly::variable(sys.A.field(), j) * sys.subpf[static_cast<size_t>(i)];
            if (i % 2 == 1) col = -col;
            for (int row = 0; row < 20; ++row)
                CHECK(sys.A.at(row, 4 * i + j) == col.coeff(mons[static_cast<size_t>(row)]));
        }
}

TEST_CASE("full frame representation: Pf(M) equals the surface exactly") {
    const MultiPoly& F = running_example();
    for (const std::vector<ProjPoint>& pts : {frame_a(), frame_b()}) {
        FrameRep rep = represent_with_frame(F, pts);
        REQUIRE(rep.M.size() == 6);
        CHECK(rep.constant == AN(Rat(1)));
        CHECK(rep.M.pfaffian() == F);
        REQUIRE(rep.forms.size() == 5);
        for (const MultiPoly& l : rep.forms)
            CHECK((l.is_zero() || l.is_homogeneous(1)));
    }
}

TEST_CASE("family shift moves the forms but not the Pfaffian") {
    const MultiPoly& F = running_example();
    FrameRep base = represent_with_frame(F, frame_a());
    FrameRep shifted =
        represent_with_frame(F, frame_a(), std::vector<Rat>{Rat(1), Rat(0), Rat(-2), Rat(0), Rat(3)});
    CHECK(shifted.constant == AN(Rat(1)));
    CHECK(shifted.M.pfaffian() == F);
    bool moved = false;
    for (size_t i = 0; i < 5; ++i)
        if (shifted.forms[i] != base.forms[i]) moved = true;
    CHECK(moved);

    // the all-zero shift reproduces the base solution
    FrameRep zero = represent_with_frame(
        F, frame_a(), std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    for (size_t i = 0; i < 5; ++i) CHECK(zero.forms[i] == base.forms[i]);
}

TEST_CASE("a frame with irrational coordinates still gives Pf equal to F") {
    FieldPtr k = NumberField::make({Rat(-2), Rat(0), Rat(1)}); // adjoin a square root of 2
    AN r = AN::generator(k);
    const MultiPoly& F = running_example();
    std::vector<ProjPoint> pts{
        ProjPoint::of_ints({1, 0, 0, 0}), ProjPoint::of_ints({0, 1, 0, 0}),
        ProjPoint(k, {AN::zero(k), -(r + r), r, AN::one(k)}),
        ProjPoint::of_ints({0, -1, 1, 1}), ProjPoint::of_ints({1, -1, 0, 1})};
    for (const ProjPoint& p : pts) REQUIRE(F.eval(p.coords()).is_zero());
    FrameRep rep = represent_with_frame(F, pts);
    CHECK(rep.constant == AN(Rat(1)));
    MultiPoly pf = rep.M.pfaffian();
    CHECK(pfaffian_constant(rep.M, F) == AN(Rat(1)));
    CHECK(pf.field()->degree() == 2);
}

TEST_CASE("frame construction rejects bad input with specific codes") {
    const MultiPoly& F = running_example();

    std::vector<ProjPoint> off = frame_a();
    off[3] = ProjPoint::of_ints({1, 1, 1, 1}); // not on the surface
    CHECK(code_of([&] { represent_with_frame(F, off); }) == errc::point_not_on_surface);

    // four points on the plane x0 = 0, all on the surface
    std::vector<ProjPoint> coplanar{
        ProjPoint::of_ints({1, 0, 0, 0}), ProjPoint::of_ints({0, 1, 0, 0}),
        ProjPoint::of_ints({0, -1, 1, 1}), ProjPoint::of_ints({0, -8, 2, 1}),
        ProjPoint::of_ints({0, 1, -1, 1})};
    for (const ProjPoint& p : coplanar) REQUIRE(F.eval(p.coords()).is_zero());
    CHECK(code_of([&] { represent_with_frame(F, coplanar); }) == errc::not_general_position);

    CHECK(code_of([&] { build_frame_system(F, {frame_a()[0], frame_a()[1]}); }) ==
          errc::wrong_size);
    CHECK(code_of([&] {
              build_frame_system(MultiPoly::parse("x0^2 + x1^2"), frame_a());
          }) == errc::not_cubic);
}

TEST_CASE("the 3x3 companion matrix borders to a quadric Pfaffian") {
    FieldPtr q = Q();
    SkewLinearMatrix Tp = t_prime_matrix(q);
    REQUIRE(Tp.size() == 3);
    std::vector<MultiPoly> L{MultiPoly::parse("x0"), MultiPoly::parse("x1 + x2"),
                             MultiPoly::parse("x3")};
    SkewLinearMatrix M = SkewLinearMatrix::bordered(Tp, L);
    // Pf = L0*Pf(del 0) - L1*Pf(del 1) + L2*Pf(del 2) with the 2x2 Pfaffians
    // being the single off-diagonal entries
    MultiPoly expect = L[0] * Tp.at(1, 2) - L[1] * Tp.at(0, 2) + L[2] * Tp.at(0, 1);
    CHECK(M.pfaffian() == expect);
}
