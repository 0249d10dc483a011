// test_pfaffian.cpp — skew matrices of linear forms: Pfaffians checked
// against an independent perfect-matchings expansion, the distinguished 5x5
// template and its sub-Pfaffians, bordering, and substitution.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/frame.hpp"
#include "pfrep/skewmat.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace pfrep;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

// Pfaffian by summing over perfect matchings with the permutation sign — a
// formula entirely unlike the last-row recursion used by the library.
MultiPoly pf_matchings(const SkewLinearMatrix& M) {
    int n = M.size();
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    MultiPoly total(M.field());
    do {
        bool canonical = true;
        for (int k = 0; k + 1 < n; k += 2)
            if (idx[static_cast<size_t>(k)] > idx[static_cast<size_t>(k + 1)]) canonical = false;
        for (int k = 2; k < n; k += 2)
            if (idx[static_cast<size_t>(k - 2)] > idx[static_cast<size_t>(k)]) canonical = false;
        if (!canonical) continue; // each matching counted once
        int sign = 1;
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) sign = -sign;
        MultiPoly prod = MultiPoly::constant(AN::of(M.field(), Rat(sign)));
        for (int k = 0; k + 1 < n; k += 2)
            prod = prod * M.at(idx[static_cast<size_t>(k)], idx[static_cast<size_t>(k + 1)]);
        total += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

MultiPoly lin(const std::string& s) { return MultiPoly::parse(s); }

// a deterministic "random" linear form from a small multiplicative stream
MultiPoly pseudo_form(const FieldPtr& f, unsigned& state) {
    MultiPoly out(f);
    for (int i = 0; i < 4; ++i) {
        state = state * 1103515245u + 12345u;
        long c = static_cast<long>((state >> 16) % 7u) - 3;
        if (c == 0) continue;
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        out.add_term(e, AN::of(f, Rat(c)));
    }
    return out;
}

} // namespace

TEST_CASE("4x4 Pfaffian is the classical three-term expression") {
    FieldPtr q = Q();
    SkewLinearMatrix M(4, q);
    M.set(0, 1, lin("x0"));
    M.set(0, 2, lin("x1"));
    M.set(0, 3, lin("x2"));
    M.set(1, 2, lin("x3"));
    M.set(1, 3, lin("x0 - x1"));
    M.set(2, 3, lin("x2 + 2*x3"));
    MultiPoly expect = lin("x0") * lin("x2 + 2*x3") - lin("x1") * lin("x0 - x1") +
                       lin("x2") * lin("x3");
    CHECK(M.pfaffian() == expect);
    CHECK(M.pfaffian() == pf_matchings(M));
}

TEST_CASE("6x6 Pfaffians agree with the perfect-matchings expansion") {
    FieldPtr q = Q();
    unsigned state = 20260814u;
    for (int trial = 0; trial < 5; ++trial) {
        SkewLinearMatrix M(6, q);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) M.set(i, j, pseudo_form(q, state));
        CHECK(M.pfaffian() == pf_matchings(M));
    }
}

TEST_CASE("skew structure is enforced and sub-Pfaffians delete cleanly") {
    FieldPtr q = Q();
    SkewLinearMatrix M(4, q);
    M.set(1, 2, lin("x0"));
    CHECK(M.at(2, 1) == -lin("x0"));
    CHECK(M.at(1, 1).is_zero());
    CHECK_THROWS_AS(M.set(1, 1, lin("x0")), Error); // nonzero diagonal forbidden
    CHECK_THROWS_AS(M.set(0, 1, MultiPoly::parse("x0^2")), Error);
    CHECK_THROWS_AS(SkewLinearMatrix(3, q).pfaffian(), Error); // odd size

    // deleting row+column i of a 6x6 and taking the Pfaffian equals sub_pfaffian(i)
    unsigned state = 7u;
    SkewLinearMatrix B(6, q);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) B.set(i, j, pseudo_form(q, state));
    for (int i = 0; i < 6; ++i) CHECK(B.sub_pfaffian(i) == B.deleted(i).pfaffian());
}

TEST_CASE("the 5x5 template has the paper-shaped sub-Pfaffians") {
    FieldPtr q = Q();
    SkewLinearMatrix T = t_frame_matrix(q);
    REQUIRE(T.size() == 5);
    std::vector<MultiPoly> sp = T.sub_pfaffians();
    REQUIRE(sp.size() == 5);
    CHECK(sp[0] == lin("x0*x1 - x1*x3"));
    CHECK(sp[1] == lin("x2*x3 - x1*x2"));
    CHECK(sp[2] == lin("x1*x2 - x0*x2"));
    CHECK(sp[3] == lin("x1*x3 - x2*x3"));
    CHECK(sp[4] == lin("x0*x3 - x1*x3"));

    // every sub-Pfaffian vanishes on all five standard frame points
    for (const MultiPoly& p : sp)
        for (const ProjPoint& pt : standard_frame_points()) CHECK(p.eval(pt.coords()).is_zero());
}

TEST_CASE("bordering expands as the signed sub-Pfaffian combination") {
    FieldPtr q = Q();
    SkewLinearMatrix T = t_frame_matrix(q);
    std::vector<MultiPoly> L{lin("x0"), lin("x1 - x2"), lin("x3"), lin("2*x0 + x1"), lin("x2")};
    SkewLinearMatrix M = SkewLinearMatrix::bordered(T, L);
    REQUIRE(M.size() == 6);
    // bordered layout: original block plus the forms in the last column
    for (int i = 0; i < 5; ++i) CHECK(M.at(i, 5) == L[static_cast<size_t>(i)]);

    MultiPoly expect(q);
    std::vector<MultiPoly> sp = T.sub_pfaffians();
    for (int i = 0; i < 5; ++i) {
        MultiPoly term = L[static_cast<size_t>(i)] * sp[static_cast<size_t>(i)];
        expect += (i % 2 == 0) ? term : -term;
    }
    CHECK(M.pfaffian() == expect);
    CHECK(M.pfaffian() == pf_matchings(M));
}

TEST_CASE("substitution commutes with the Pfaffian") {
    FieldPtr q = Q();
    unsigned state = 99u;
    SkewLinearMatrix M(6, q);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) M.set(i, j, pseudo_form(q, state));
    Mat A(4, 4, q);
    long vals[4][4] = {{1, 2, 0, 0}, {0, 1, 0, 3}, {1, 0, 1, 0}, {0, 0, 2, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A.at(i, j) = AN(Rat(vals[i][j]));
    CHECK(M.substituted(A).pfaffian() == M.pfaffian().substituted(A));
}

TEST_CASE("pfaffian_constant recovers scalars and rejects non-multiples") {
    FieldPtr q = Q();
    SkewLinearMatrix T = t_frame_matrix(q);
    std::vector<MultiPoly> L{lin("x0"), lin("x1"), lin("x2"), lin("x3"), lin("x0 + x1")};
    SkewLinearMatrix M = SkewLinearMatrix::bordered(T, L);
    MultiPoly pf = M.pfaffian();
    if (!pf.is_zero()) {
        CHECK(pfaffian_constant(M, pf.scaled(AN(Rat(1, 3)))) == AN(Rat(3)));
        CHECK_THROWS_AS(pfaffian_constant(M, pf + MultiPoly::parse("x0^3")), Error);
    }
    CHECK_THROWS_AS(pfaffian_constant(M, MultiPoly(q)), Error); // zero form
}
