#include <doctest.h>

#include "helpers.hpp"
#include "kulsurf/multipoly.hpp"

using namespace kulsurf;
using testutil::C;
using testutil::net_conic;
using testutil::nodal_cubic;
using testutil::X;

TEST_CASE("canonical term order is graded lexicographic with X1 highest") {
    MultiPoly p = X(3, 0) * X(3, 1) + X(3, 2).pow(3) + C(3, 5) + X(3, 0);
    std::vector<Exps> keys;
    for (const auto& [e, c] : p.terms()) keys.push_back(e);
    // Ascending map order: constant, X1, X1*X2, X3^3.
    CHECK(keys == std::vector<Exps>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 3}});
    CHECK(p.total_degree() == 3);
    CHECK(p.leading_coeff() == 1);
}

TEST_CASE("zero coefficients never survive arithmetic") {
    MultiPoly a = X(2, 0) + X(2, 1);
    MultiPoly b = X(2, 0) - X(2, 1);
    MultiPoly diff = a - a;
    CHECK(diff.is_zero());
    CHECK(diff.term_count() == 0);
    CHECK((a * b).term_count() == 2);  // X1^2 - X2^2
}

TEST_CASE("difference of the first two net conics") {
    MultiPoly expect = C(3, 3) * X(3, 0).pow(2) - C(3, 3) * X(3, 1).pow(2);
    CHECK(net_conic(0) - net_conic(1) == expect);
}

TEST_CASE("evaluation of the first net conic at fixed points") {
    MultiPoly q1 = net_conic(0);
    CHECK(q1.evaluate({Rat(1), Rat(1), Rat(1)}) == 0);
    CHECK(q1.evaluate({Rat(1), Rat(0), Rat(0)}) == 3);
    CHECK(q1.evaluate({Rat(1), Rat(1), Rat(-1)}) == 4);
}

TEST_CASE("partial derivative of the first net conic") {
    MultiPoly expect = C(3, 6) * X(3, 0) - X(3, 1) - X(3, 2);
    CHECK(net_conic(0).derivative(0) == expect);
}

TEST_CASE("jacobian determinant of the net at spot points") {
    MultiPoly j = jacobian_det3(net_conic(0), net_conic(1), net_conic(2));
    CHECK(j.evaluate({Rat(1), Rat(1), Rat(0)}) == -72);
    // First column of the Jacobian matrix vanishes at (0, 1, -1).
    CHECK(j.evaluate({Rat(0), Rat(1), Rat(-1)}) == 0);
}

TEST_CASE("substitution of shifted variables") {
    MultiPoly p = X(3, 0).pow(2);
    MultiPoly image = X(3, 0) + C(3, 1);
    MultiPoly r = p.substitute({image, X(3, 1), X(3, 2)});
    CHECK(r == X(3, 0).pow(2) + C(3, 2) * X(3, 0) + C(3, 1));
}

TEST_CASE("substitution rejects mismatched image arities") {
    MultiPoly p = X(3, 0) + X(3, 1);
    CHECK_THROWS_AS(p.substitute({X(2, 0), X(3, 1), X(3, 2)}), std::invalid_argument);
}

TEST_CASE("ring axioms hold on random polynomials") {
    Rng rng(0xA5EED001);
    const MultiPoly zero(3);
    const MultiPoly one = C(3, 1);
    for (int i = 0; i < 1000; ++i) {
        MultiPoly a = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly b = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly c = testutil::random_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(0xA5EED002);
    for (int i = 0; i < 1000; ++i) {
        MultiPoly f = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly g = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly h = testutil::random_poly(rng, 3, 2, 3);
        auto pt = testutil::random_point(rng, 3);
        CHECK((f * g + h).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) + h.evaluate(pt));
    }
}

TEST_CASE("exact division inverts multiplication") {
    Rng rng(0xA5EED003);
    int done = 0;
    while (done < 200) {
        MultiPoly f = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly g = testutil::random_poly(rng, 3, 2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        auto q = (f * g).divided_exact(g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
        ++done;
    }
}

TEST_CASE("inexact division reports failure") {
    CHECK_FALSE((X(2, 0) + C(2, 1)).divided_exact(X(2, 1)).has_value());
}

TEST_CASE("primitive scaling gives coprime integer coefficients, positive leading") {
    // p = -2/3*X1^2 + 2/3*X2; clearing contents and fixing the sign of the
    // grlex-leading coefficient leaves X1^2 - X2.
    MultiPoly p = C(3, -4, 6) * X(3, 0).pow(2) + C(3, 2, 3) * X(3, 1);
    MultiPoly s = p.primitive_scaled();
    CHECK(s == X(3, 0).pow(2) - X(3, 1));
    CHECK(s.leading_coeff() == 1);
    MultiPoly t = (C(3, -2) * X(3, 0).pow(2)).primitive_scaled();
    CHECK(t == X(3, 0).pow(2));
}

TEST_CASE("homogeneous form validation") {
    CHECK(HomogeneousForm(net_conic(0)).degree == 2);
    CHECK(HomogeneousForm(nodal_cubic()).degree == 3);
    CHECK_THROWS_AS(HomogeneousForm(X(3, 0) + C(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousForm(MultiPoly(3)), std::invalid_argument);
}

TEST_CASE("canonical text rendering") {
    CHECK(net_conic(0).to_string() == "3*X1^2 - X1*X2 - X1*X3 - X2*X3");
    CHECK(MultiPoly(3).to_string() == "0");
    CHECK(C(2, -1, 2).to_string() == "-1/2");
    CHECK((X(2, 0) - X(2, 1)).to_string() == "X1 - X2");
}
