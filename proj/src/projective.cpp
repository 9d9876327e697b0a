#include "kulsurf/projective.hpp"

#include <stdexcept>
#include <utility>

namespace kulsurf {

namespace {

void canonicalize(Int& a, Int& b, Int& c) {
    if (a == 0 && b == 0 && c == 0)
        throw std::invalid_argument("projective point with all coordinates zero");
    Int g = int_gcd(int_gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    const Int& lead = (a != 0) ? a : (b != 0) ? b : c;
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
}

}  // namespace

ProjPoint::ProjPoint(Int a, Int b, Int c)
    : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)) {
    canonicalize(x1, x2, x3);
}

ProjPoint::ProjPoint(const Rat& a, const Rat& b, const Rat& c) {
    Int m = int_lcm(int_lcm(a.get_den(), b.get_den()), c.get_den());
    x1 = a.get_num() * (m / a.get_den());
    x2 = b.get_num() * (m / b.get_den());
    x3 = c.get_num() * (m / c.get_den());
    canonicalize(x1, x2, x3);
}

const Int& ProjPoint::operator[](int i) const {
    switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return x3;
        default: throw std::out_of_range("projective coordinate index");
    }
}

int ProjPoint::first_nonzero_index() const {
    if (x1 != 0) return 0;
    if (x2 != 0) return 1;
    return 2;
}

std::vector<Rat> ProjPoint::coords() const { return {Rat(x1), Rat(x2), Rat(x3)}; }

std::string ProjPoint::to_string() const {
    return "(" + x1.get_str() + ":" + x2.get_str() + ":" + x3.get_str() + ")";
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (x1 != o.x1) return x1 < o.x1;
    if (x2 != o.x2) return x2 < o.x2;
    return x3 < o.x3;
}

}  // namespace kulsurf
