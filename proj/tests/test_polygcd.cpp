#include <doctest.h>

#include "helpers.hpp"
#include "kulsurf/polygcd.hpp"

using namespace kulsurf;
using testutil::C;
using testutil::X;

TEST_CASE("multivariate gcd on fixed inputs") {
    MultiPoly x = X(3, 0), y = X(3, 1), z = X(3, 2);
    CHECK(poly_gcd(x * y, x * z) == x);
    CHECK(poly_gcd(x * x - y * y, x * x + C(3, 2) * x * y + y * y) == x + y);
    CHECK(poly_gcd(x * y, z * z).is_constant());
    CHECK(poly_gcd(MultiPoly(3), x * y) == x * y);
    // Scaling never changes the (primitive, positive-leading) result.
    CHECK(poly_gcd((x * y).scaled(make_rat(Int(-3), Int(7))), (x * z).scaled(Rat(5))) == x);
}

TEST_CASE("gcd divides both inputs and catches planted factors") {
    Rng rng(0xA5EED040);
    int done = 0;
    while (done < 200) {
        MultiPoly common = testutil::random_poly(rng, 3, 2, 3);
        MultiPoly a = testutil::random_poly(rng, 3, 2, 3);
        MultiPoly b = testutil::random_poly(rng, 3, 2, 3);
        if (common.total_degree() < 1 || a.is_zero() || b.is_zero()) continue;
        MultiPoly g = poly_gcd(a * common, b * common);
        CHECK((a * common).divided_exact(g).has_value());
        CHECK((b * common).divided_exact(g).has_value());
        CHECK(g.divided_exact(common.primitive_scaled()).has_value());
        ++done;
    }
}

TEST_CASE("coprime products have constant gcd") {
    MultiPoly x = X(2, 0), y = X(2, 1);
    MultiPoly a = x.pow(2) + y.pow(2) + C(2, 1);
    MultiPoly b = x + y + C(2, 3);
    CHECK(poly_gcd(a, b).is_constant());
    CHECK_FALSE(have_common_factor(a, b));
    CHECK(have_common_factor(a * b, b));
}

TEST_CASE("squarefree detection") {
    MultiPoly x = X(3, 0), y = X(3, 1);
    CHECK(is_squarefree(x * y));  // distinct factors
    CHECK_FALSE(is_squarefree(x * x));
    CHECK_FALSE(is_squarefree(x * x * y));
    CHECK(is_squarefree(testutil::nodal_cubic()));
    CHECK(is_squarefree(testutil::net_conic(0)));
    CHECK_FALSE(is_squarefree((x + y).pow(2)));
    CHECK(is_squarefree(C(3, 5)));
}
