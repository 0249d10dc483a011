// test_exactfield.cpp — rationals, number fields, univariate polynomials,
// factorization, field extensions, and exact linear algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/extension.hpp"
#include "pfrep/factor.hpp"
#include "pfrep/linalg.hpp"

#include <vector>

using namespace pfrep;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

UniPoly upoly(const FieldPtr& f, const std::vector<long>& asc) {
    std::vector<Rat> q;
    for (long v : asc) q.emplace_back(v);
    return UniPoly::from_rational(f, q);
}

} // namespace

TEST_CASE("rational parsing and canonical printing") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-4/2") == Rat(-2));
    CHECK(rat_parse(" 7 ") == Rat(7));
    CHECK(rat_str(Rat(5)) == "5/1");
    CHECK(rat_str(Rat(-1, 3)) == "-1/3");
    CHECK(rat_str_short(Rat(5)) == "5");
    CHECK(rat_str_short(Rat(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(rat_parse("x"), Error);
    CHECK(common_denominator({Rat(1, 2), Rat(1, 3), Rat(5)}) == 6);
    CHECK(integer_content({Int(6), Int(-9), Int(15)}) == 3);
}

TEST_CASE("number field construction and element arithmetic") {
    FieldPtr q = Q();
    CHECK(q->degree() == 1);
    CHECK(q->is_rational());

    // Q(sqrt 2)
    FieldPtr f = NumberField::make({Rat(-2), Rat(0), Rat(1)});
    CHECK(f->degree() == 2);
    AN r = AN::generator(f);
    CHECK(r * r == AN::of(f, Rat(2)));
    CHECK((r + r) * r == AN::of(f, Rat(4)));
    AN inv = (AN::one(f) + r).inverse(); // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(inv == r - AN::one(f));
    CHECK(r.pow(5) == AN(f, {Rat(0), Rat(4)}));

    // reducible modulus rejected
    CHECK_THROWS_AS(NumberField::make({Rat(-1), Rat(0), Rat(1)}), Error); // t^2 - 1
    // non-monic rejected
    CHECK_THROWS_AS(NumberField::make({Rat(1), Rat(0), Rat(2)}), Error);
}

TEST_CASE("mixed-field coercion: rationals embed anywhere") {
    FieldPtr f = NumberField::make({Rat(-2), Rat(0), Rat(1)});
    AN a = AN(Rat(3, 2)); // plain rational
    AN b = AN::generator(f);
    AN s = a + b;
    CHECK(s.field()->same(*f));
    CHECK(s == AN(f, {Rat(3, 2), Rat(1)}));
    FieldPtr g = NumberField::make({Rat(-3), Rat(0), Rat(1)});
    CHECK_THROWS_AS((void)(AN::generator(f) + AN::generator(g)), Error);
}

TEST_CASE("unipoly arithmetic, gcd, squarefree decomposition") {
    FieldPtr q = Q();
    UniPoly x = UniPoly::x(q);
    UniPoly f = (x - UniPoly::constant(AN(Rat(1)))) * (x - UniPoly::constant(AN(Rat(1)))) *
                (x + UniPoly::constant(AN(Rat(2))));
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[0].first == x + UniPoly::constant(AN(Rat(2))));
    CHECK(sq[1].second == 2);
    CHECK(sq[1].first == x - UniPoly::constant(AN(Rat(1))));

    UniPoly g = UniPoly::gcd(f, f.derivative());
    CHECK(g == x - UniPoly::constant(AN(Rat(1))));

    UniPoly quo(q), rem(q);
    UniPoly::divmod(f, g, quo, rem);
    CHECK(rem.is_zero());
    CHECK(quo * g == f);
}

TEST_CASE("resultant with formal degrees") {
    FieldPtr q = Q();
    UniPoly a = upoly(q, {-2, 0, 1}); // x^2 - 2
    UniPoly b = upoly(q, {-3, 1});    // x - 3
    CHECK(resultant(a, b) == AN(Rat(7)));
    // formal degree above the true one multiplies by lead^extra of the other
    CHECK(resultant(a, b, 2, 2) == AN(Rat(7)));
}

TEST_CASE("factorization over Q: frozen shapes") {
    FieldPtr q = Q();
    // x^4 - 4 = (x^2 - 2)(x^2 + 2)
    FactorList fl = factor(upoly(q, {-4, 0, 0, 0, 1}));
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.constant == AN(Rat(1)));
    CHECK(fl.factors[0].first == upoly(q, {-2, 0, 1}));
    CHECK(fl.factors[1].first == upoly(q, {2, 0, 1}));
    CHECK(fl.factors[0].second == 1);

    // 6x^2 + 6x - 12 = 6 (x - 1)(x + 2)
    fl = factor(upoly(q, {-12, 6, 6}));
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.constant == AN(Rat(6)));
    CHECK(fl.factors[0].first == upoly(q, {-1, 1}));
    CHECK(fl.factors[1].first == upoly(q, {2, 1}));

    // cyclotomic-style irreducible
    CHECK(is_irreducible(upoly(q, {1, 1, 1, 1, 1})));    // (x^5-1)/(x-1)
    CHECK(is_irreducible(upoly(q, {-2, 0, 0, 1})));      // x^3 - 2
    CHECK_FALSE(is_irreducible(upoly(q, {1, 2, 1})));    // (x+1)^2
    CHECK(roots_in_field(upoly(q, {1, 2, 1})).size() == 1);
    CHECK(roots_in_field(upoly(q, {1, 2, 1}))[0].second == 2);
    CHECK(roots_in_field(upoly(q, {1, 2, 1}))[0].first == AN(Rat(-1)));
}

TEST_CASE("factorization over an extension (Trager)") {
    FieldPtr f = NumberField::make({Rat(-2), Rat(0), Rat(1)}); // Q(sqrt 2)
    // x^2 - 2 splits over Q(sqrt 2)
    UniPoly p = UniPoly::from_rational(f, {Rat(-2), Rat(0), Rat(1)});
    FactorList fl = factor(p);
    REQUIRE(fl.factors.size() == 2);
    AN r = AN::generator(f);
    // the two factors are x -+ sqrt2
    UniPoly prod = fl.factors[0].first * fl.factors[1].first;
    CHECK(prod == p.monic());
    auto rts = roots_in_field(p);
    REQUIRE(rts.size() == 2);
    CHECK(((rts[0].first == r && rts[1].first == -r) || (rts[0].first == -r && rts[1].first == r)));

    // x^2 - 3 stays irreducible over Q(sqrt 2)
    CHECK(is_irreducible(UniPoly::from_rational(f, {Rat(-3), Rat(0), Rat(1)})));
}

TEST_CASE("field extension flattens towers with exact embeddings") {
    // Q(sqrt 2) extended by sqrt 3: degree 4 with both roots present
    FieldPtr f2 = NumberField::make({Rat(-2), Rat(0), Rat(1)});
    FieldExtension e = extend_field(UniPoly::from_rational(f2, {Rat(-3), Rat(0), Rat(1)}));
    CHECK(e.field->degree() == 4);
    CHECK(e.alpha_image * e.alpha_image == AN::of(e.field, Rat(2)));
    CHECK(e.root * e.root == AN::of(e.field, Rat(3)));
    // embedding is a homomorphism
    AN two = e.embed(AN::of(f2, Rat(1)) + AN::generator(f2));
    CHECK(two == AN::one(e.field) + e.alpha_image);

    // extending by a reducible polynomial reports ReducibleModulus
    CHECK_THROWS_AS(extend_field(UniPoly::from_rational(f2, {Rat(-2), Rat(0), Rat(1)})), Error);

    // degree-1 extension returns the base field
    FieldExtension triv = extend_field(UniPoly::from_rational(f2, {Rat(5), Rat(1)}));
    CHECK(triv.field->same(*f2));

    // degree cap: sextic over a quadratic field would be degree 12; x that by 2
    CHECK_THROWS_AS(
        extend_field(UniPoly::from_rational(
            NumberField::make({Rat(-2), Rat(0), Rat(1)}),
            {Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})),
        Error);
}

TEST_CASE("exact linear algebra: rref, solve, kernel, det, inverse") {
    FieldPtr q = Q();
    Mat m(3, 3, q);
    long vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = AN(Rat(vals[i][j]));
    CHECK(m.rank() == 3);
    CHECK(m.det() == AN(Rat(-1)));
    CHECK(det_by_cofactors(m) == AN(Rat(-1)));

    Mat inv = m.inverse();
    Mat prod = m * inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? AN(Rat(1)) : AN(Rat(0))));

    std::vector<AN> rhs{AN(Rat(1)), AN(Rat(2)), AN(Rat(3))};
    std::vector<AN> x = m.solve(rhs);
    for (int i = 0; i < 3; ++i) {
        AN acc = AN::zero(q);
        for (int j = 0; j < 3; ++j) acc += m.at(i, j) * x[static_cast<size_t>(j)];
        CHECK(acc == rhs[static_cast<size_t>(i)]);
    }

    // kernel of a rank-1 3x3 matrix has dimension 2 and is annihilated
    Mat r1(3, 3, q);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r1.at(i, j) = AN(Rat((i + 1) * (j + 1)));
    CHECK(r1.rank() == 1);
    Mat ker = r1.kernel();
    CHECK(ker.cols() == 2);
    for (int c = 0; c < ker.cols(); ++c)
        for (int i = 0; i < 3; ++i) {
            AN acc = AN::zero(q);
            for (int j = 0; j < 3; ++j) acc += r1.at(i, j) * ker.at(j, c);
            CHECK(acc.is_zero());
        }
}

TEST_CASE("det_by_cofactors agrees with elimination over an extension") {
    FieldPtr f = NumberField::make({Rat(-2), Rat(0), Rat(1)});
    AN r = AN::generator(f);
    Mat m(3, 3, f);
    long base[3][3] = {{1, 2, 0}, {0, 1, 1}, {3, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m.at(i, j) = AN::of(f, Rat(base[i][j]));
            if (i == j) m.at(i, j) += r;
        }
    CHECK(det_by_cofactors(m) == m.det());
}

TEST_CASE("content reduction clears denominators and the content") {
    FieldPtr f = NumberField::make({Rat(-2), Rat(0), Rat(1)});
    std::vector<AN> v{AN(f, {Rat(2, 3), Rat(4, 3)}), AN(f, {Rat(0), Rat(-2)})};
    content_reduce(f, v);
    CHECK(v[0] == AN(f, {Rat(1), Rat(2)}));
    CHECK(v[1] == AN(f, {Rat(0), Rat(-3)}));

    // all-zero vectors and rational fields pass through untouched
    std::vector<AN> z{AN::zero(f), AN::zero(f)};
    content_reduce(f, z);
    CHECK(z[0].is_zero());
    std::vector<AN> w{AN(Rat(1, 2))};
    content_reduce(NumberField::rationals(), w);
    CHECK(w[0] == AN(Rat(1, 2)));
}
