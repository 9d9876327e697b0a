#include <doctest.h>

#include "helpers.hpp"
#include "kulsurf/resultant.hpp"

using namespace kulsurf;
using testutil::C;
using testutil::X;

TEST_CASE("resultant eliminating y from y - x^2 and y") {
    // Vars: (x, y) as (X1, X2).
    MultiPoly f = X(2, 1) - X(2, 0).pow(2);
    MultiPoly g = X(2, 1);
    MultiPoly r = resultant(f, g, 1);
    bool up_to_sign = (r == X(2, 0).pow(2)) || (r == -(X(2, 0).pow(2)));
    CHECK(up_to_sign);
}

TEST_CASE("degenerate degree conventions") {
    MultiPoly f = X(2, 1).pow(3) - X(2, 0);
    MultiPoly g = X(2, 0) - C(2, 2);
    CHECK(resultant(f, g, 1) == g.pow(3));
    CHECK(resultant(g, f, 1) == g.pow(3));
    CHECK(resultant(g, g, 1) == C(2, 1));
    CHECK(resultant(MultiPoly(2), f, 1).is_zero());
    CHECK_THROWS_AS(resultant(MultiPoly(2), MultiPoly(2), 1), std::invalid_argument);
}

TEST_CASE("resultant of univariate integer polynomials matches a known value") {
    // res(x^2 - 1, x - 3) = (3-1)(3+1) = 8 up to the classical sign convention,
    // here exactly f evaluated at the root of g since g is monic.
    MultiPoly f = X(1, 0).pow(2) - C(1, 1);
    MultiPoly g = X(1, 0) - C(1, 3);
    CHECK(resultant(f, g, 0) == C(1, 8));
}

TEST_CASE("resultant vanishes where the inputs share a root in the eliminated variable") {
    Rng rng(0xA5EED030);
    int done = 0;
    while (done < 300) {
        MultiPoly f = testutil::random_poly(rng, 3, 3, 4);
        MultiPoly g = testutil::random_poly(rng, 3, 3, 4);
        auto pt = testutil::random_point(rng, 3);
        // Shift constants so both vanish at pt: now v = pt[2] is a shared root
        // of the slices f(pt1, pt2, v), g(pt1, pt2, v).
        f = f - C(3, 1).scaled(f.evaluate(pt));
        g = g - C(3, 1).scaled(g.evaluate(pt));
        if (f.degree_in(2) < 1 || g.degree_in(2) < 1) continue;
        MultiPoly r = resultant(f, g, 2);
        CHECK(r.evaluate(pt) == 0);
        CHECK(r.degree_in(2) <= 0);
        ++done;
    }
}

TEST_CASE("multiplicativity in the first argument") {
    Rng rng(0xA5EED031);
    int done = 0;
    while (done < 100) {
        MultiPoly a = testutil::random_poly(rng, 2, 2, 3);
        MultiPoly b = testutil::random_poly(rng, 2, 2, 3);
        MultiPoly g = testutil::random_poly(rng, 2, 2, 3);
        if (a.degree_in(1) < 1 || b.degree_in(1) < 1 || g.degree_in(1) < 1) continue;
        CHECK(resultant(a * b, g, 1) == resultant(a, g, 1) * resultant(b, g, 1));
        ++done;
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion on small matrices") {
    Rng rng(0xA5EED032);
    for (int n = 1; n <= 3; ++n) {
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n),
                                                  std::vector<MultiPoly>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& e : row) e = testutil::random_poly(rng, 2, 2, 2);
            MultiPoly det = bareiss_determinant(m);
            MultiPoly expect(2);
            if (n == 1) expect = m[0][0];
            if (n == 2) expect = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            if (n == 3)
                expect = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            CHECK(det == expect);
        }
    }
}
