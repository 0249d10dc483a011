// test_classify.cpp — structural classification of cubic forms: irreducible
// surfaces, cones, plane+quadric and three-plane splits, over the smallest
// field that exposes the factorization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/classify.hpp"
#include "pfrep/quadform.hpp"

#include <functional>

using namespace pfrep;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::internal;
}

// rational-coefficient polynomial moved verbatim into another field
MultiPoly into_field(const FieldPtr& f, const MultiPoly& F) {
    MultiPoly out(f);
    for (const auto& [e, c] : F.terms()) out.add_term(e, AN::of(f, c.rat_value()));
    return out;
}

// c * product(planes^mult) * quadric == F viewed in the factor field
void check_product(const MultiPoly& F, const CubicFactors& cf) {
    MultiPoly prod = MultiPoly::constant(cf.constant);
    for (const auto& [pl, m] : cf.planes)
        for (int k = 0; k < m; ++k) prod = prod * pl;
    if (cf.quadric) prod = prod * *cf.quadric;
    CHECK(prod == into_field(cf.field, F));
}

bool has_plane(const CubicFactors& cf, const std::string& text, int mult) {
    MultiPoly want = into_field(cf.field, MultiPoly::parse(text));
    for (const auto& [pl, m] : cf.planes)
        if (pl == want && m == mult) return true;
    return false;
}

} // namespace

TEST_CASE("irreducible non-cones stay unfactored") {
    for (const char* text : {"x0*x1^2 + x1*x3^2 + x2^3", "x0^3 + x1^3 + x2^3 + x3^3",
                             "x0^2*x3 + x0*x1*x2 + x1^3"}) {
        MultiPoly F = MultiPoly::parse(text);
        Classification c = classify(F);
        CHECK(c.kind == SurfaceKind::irreducible);
        CHECK(c.factors.planes.empty());
        CHECK(!c.factors.quadric.has_value());
        CHECK(!c.cone_vertex.has_value());
        CHECK(cone_vertex(F) == std::nullopt);
    }
}

TEST_CASE("a cylinder over a plane cubic is recognized with its vertex") {
    MultiPoly F = MultiPoly::parse("x1^2*x2 - x0^3 + 2*x2^3");
    Classification c = classify(F);
    CHECK(c.kind == SurfaceKind::cone);
    REQUIRE(c.cone_vertex.has_value());
    CHECK(*c.cone_vertex == ProjPoint::of_ints({0, 0, 0, 1}));
    CHECK(c.factors.planes.empty());

    auto v = cone_vertex(F);
    REQUIRE(v.has_value());
    CHECK(*v == ProjPoint::of_ints({0, 0, 0, 1}));
}

TEST_CASE("three rational planes, distinct and repeated") {
    MultiPoly F = MultiPoly::parse("2*x0*x1*x2");
    Classification c = classify(F);
    CHECK(c.kind == SurfaceKind::three_planes);
    CHECK(c.factors.field->is_rational());
    REQUIRE(c.factors.planes.size() == 3);
    CHECK(c.factors.constant == AN(Rat(2)));
    CHECK(has_plane(c.factors, "x0", 1));
    CHECK(has_plane(c.factors, "x1", 1));
    CHECK(has_plane(c.factors, "x2", 1));
    check_product(F, c.factors);

    MultiPoly G = MultiPoly::parse("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"); // (x0+x1)^3
    Classification t = classify(G);
    CHECK(t.kind == SurfaceKind::three_planes);
    REQUIRE(t.factors.planes.size() == 1);
    CHECK(has_plane(t.factors, "x0 + x1", 3));
    CHECK(t.factors.constant == AN(Rat(1)));
    check_product(G, t.factors);

    MultiPoly H = MultiPoly::parse("4*x0^2*x1 + 4*x0*x1^2 + x1^3"); // x1*(2*x0+x1)^2
    Classification d = classify(H);
    CHECK(d.kind == SurfaceKind::three_planes);
    REQUIRE(d.factors.planes.size() == 2);
    CHECK(has_plane(d.factors, "x0 + 1/2*x1", 2));
    CHECK(has_plane(d.factors, "x1", 1));
    CHECK(d.factors.constant == AN(Rat(4)));
    check_product(H, d.factors);
}

TEST_CASE("a split needing a square root lands in a quadratic field") {
    MultiPoly F = MultiPoly::parse("x0^2*x2 - 2*x1^2*x2");
    Classification c = classify(F);
    CHECK(c.kind == SurfaceKind::three_planes);
    CHECK(c.factors.field->degree() == 2);
    REQUIRE(c.factors.planes.size() == 3);
    for (const auto& [pl, m] : c.factors.planes) CHECK(m == 1);
    check_product(F, c.factors);
}

TEST_CASE("a norm-form cubic splits into three planes of a degree-6 field") {
    MultiPoly F = MultiPoly::parse("x0^3 + 2*x1^3 + 4*x2^3 - 6*x0*x1*x2");
    Classification c = classify(F);
    CHECK(c.kind == SurfaceKind::three_planes);
    CHECK(c.factors.field->degree() == 6);
    CHECK(c.factors.chain.size() == 2);
    REQUIRE(c.factors.planes.size() == 3);
    for (const auto& [pl, m] : c.factors.planes) CHECK(m == 1);
    check_product(F, c.factors);
}

TEST_CASE("plane plus irreducible quadric") {
    MultiPoly F = MultiPoly::parse("x0*x1*x3 - x2^2*x3");
    Classification c = classify(F);
    CHECK(c.kind == SurfaceKind::plane_and_quadric);
    CHECK(c.factors.field->is_rational());
    REQUIRE(c.factors.planes.size() == 1);
    CHECK(has_plane(c.factors, "x3", 1));
    REQUIRE(c.factors.quadric.has_value());
    CHECK(*c.factors.quadric == MultiPoly::parse("x0*x1 - x2^2"));
    CHECK(quadric_rank(*c.factors.quadric) >= 3);
    check_product(F, c.factors);

    MultiPoly G = MultiPoly::parse("x0^3 + x0*x1^2 + x0*x2^2 + x0*x3^2");
    Classification d = classify(G);
    CHECK(d.kind == SurfaceKind::plane_and_quadric);
    CHECK(d.factors.field->is_rational());
    CHECK(has_plane(d.factors, "x0", 1));
    REQUIRE(d.factors.quadric.has_value());
    CHECK(quadric_rank(*d.factors.quadric) == 4);
    check_product(G, d.factors);
}

TEST_CASE("kind names are stable strings") {
    CHECK(std::string(surface_kind_name(SurfaceKind::irreducible)) == "irreducible");
    CHECK(std::string(surface_kind_name(SurfaceKind::cone)) == "cone");
    CHECK(std::string(surface_kind_name(SurfaceKind::plane_and_quadric)) == "plane-and-quadric");
    CHECK(std::string(surface_kind_name(SurfaceKind::three_planes)) == "three-planes");
}

TEST_CASE("quadric splitting utilities") {
    CHECK(quadric_rank(MultiPoly::parse("x0*x1 - x2^2")) == 3);
    CHECK(quadric_rank(MultiPoly::parse("x0^2 + x1^2 + x2^2 + x3^2")) == 4);
    CHECK(quadric_rank(MultiPoly::parse("x0^2 - 2*x1^2")) == 2);
    CHECK(quadric_rank(MultiPoly::parse("x0^2 + 2*x0*x1 + x1^2")) == 1);

    MultiPoly Q = MultiPoly::parse("x0^2 - 2*x1^2");
    CHECK(!split_low_rank_quadric(Q, false).has_value()); // no rational split
    auto qf = split_low_rank_quadric(Q, true);
    REQUIRE(qf.has_value());
    CHECK(qf->extended);
    CHECK(qf->field->degree() == 2);
    CHECK(MultiPoly::constant(qf->scale) * qf->l1 * qf->l2 == into_field(qf->field, Q));

    auto xy = split_low_rank_quadric(MultiPoly::parse("x0*x1"), false);
    REQUIRE(xy.has_value());
    CHECK(!xy->extended);
    CHECK(MultiPoly::constant(xy->scale) * xy->l1 * xy->l2 == MultiPoly::parse("x0*x1"));

    auto sq = split_low_rank_quadric(MultiPoly::parse("x0^2 + 2*x0*x1 + x1^2"), false);
    REQUIRE(sq.has_value());
    CHECK(sq->l1 == sq->l2);

    CHECK_THROWS_AS(split_low_rank_quadric(MultiPoly::parse("x0*x1 - x2^2"), true), Error);
}

TEST_CASE("bad cubics are rejected with specific codes") {
    FieldPtr q = NumberField::rationals();
    CHECK(code_of([&] { classify(MultiPoly(q)); }) == errc::zero_form);
    CHECK(code_of([&] { classify(MultiPoly::parse("x0^2 + x1^2")); }) == errc::not_cubic);
    CHECK(code_of([&] { classify(MultiPoly::parse("x0^3 + x1")); }) == errc::not_homogeneous);
    CHECK(code_of([&] { linear_factors(MultiPoly::parse("x0^4")); }) == errc::not_cubic);
}
