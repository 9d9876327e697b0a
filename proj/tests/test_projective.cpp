#include <set>

#include "doctest.h"
#include "kulsurf/projective.hpp"

using namespace kulsurf;

TEST_CASE("coordinates are reduced to a canonical representative") {
    ProjPoint p(Int(2), Int(4), Int(6));
    CHECK(p == ProjPoint(Int(1), Int(2), Int(3)));
    CHECK(p.to_string() == "(1:2:3)");

    ProjPoint q(Int(-3), Int(6), Int(0));
    CHECK(q.to_string() == "(1:-2:0)");

    ProjPoint r(Int(0), Int(0), Int(-7));
    CHECK(r.to_string() == "(0:0:1)");
    CHECK(r.first_nonzero_index() == 2);
}

TEST_CASE("rational coordinates clear denominators") {
    ProjPoint p(Rat(1, 2), Rat(-1, 3), Rat(1));
    CHECK(p == ProjPoint(Int(3), Int(-2), Int(6)));

    ProjPoint q(Rat(0), Rat(-2, 5), Rat(0));
    CHECK(q.to_string() == "(0:1:0)");
}

TEST_CASE("the zero triple is rejected") {
    CHECK_THROWS_AS(ProjPoint(Int(0), Int(0), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(ProjPoint(Rat(0), Rat(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("ordering is total and consistent with equality") {
    std::set<ProjPoint> s;
    s.insert(ProjPoint(Int(1), Int(1), Int(1)));
    s.insert(ProjPoint(Int(2), Int(2), Int(2)));
    s.insert(ProjPoint(Int(1), Int(0), Int(0)));
    s.insert(ProjPoint(Int(-1), Int(0), Int(0)));
    CHECK(s.size() == 2);

    ProjPoint a(Int(0), Int(1), Int(5));
    ProjPoint b(Int(1), Int(0), Int(0));
    CHECK(((a < b) != (b < a)));
    CHECK(!(a < a));
}

TEST_CASE("indexing and coordinate access") {
    ProjPoint p(Int(5), Int(-10), Int(15));
    CHECK(p[0] == 1);
    CHECK(p[1] == -2);
    CHECK(p[2] == 3);
    CHECK_THROWS_AS(p[3], std::out_of_range);
    auto c = p.coords();
    CHECK(c.size() == 3);
    CHECK(c[1] == Rat(-2));
}
