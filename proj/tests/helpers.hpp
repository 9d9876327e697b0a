#pragma once

#include <string>
#include <vector>

#include "kulsurf/multipoly.hpp"
#include "kulsurf/rng.hpp"

namespace testutil {

using kulsurf::Exps;
using kulsurf::MultiPoly;
using kulsurf::Rat;
using kulsurf::Rng;

inline MultiPoly X(int nvars, int var) { return MultiPoly::variable(nvars, var); }
inline MultiPoly C(int nvars, long num, long den = 1) {
    return MultiPoly::constant(nvars, kulsurf::make_rat(kulsurf::Int(num), kulsurf::Int(den)));
}

/// The three conics 3*Xi^2 - X1X2 - X1X3 - X2X3 used across the suites.
inline MultiPoly net_conic(int i) {
    MultiPoly x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
    MultiPoly xi = i == 0 ? x1 : (i == 1 ? x2 : x3);
    return C(3, 3) * xi * xi - x1 * x2 - x1 * x3 - x2 * x3;
}

/// The nodal cubic sum_{i != j} Xi^2 Xj - 6 X1X2X3.
inline MultiPoly nodal_cubic() {
    MultiPoly x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
    return x1 * x1 * x2 + x1 * x1 * x3 + x2 * x2 * x1 + x2 * x2 * x3 + x3 * x3 * x1 +
           x3 * x3 * x2 - C(3, 6) * x1 * x2 * x3;
}

inline Rat random_rat(Rng& rng, long num_range = 9, long den_range = 3) {
    long num = rng.range(-num_range, num_range);
    long den = rng.range(1, den_range);
    return kulsurf::make_rat(kulsurf::Int(num), kulsurf::Int(den));
}

inline MultiPoly random_poly(Rng& rng, int nvars, int maxdeg, int nterms) {
    MultiPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Exps e(nvars, 0);
        int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg + 1)));
        for (int i = 0; i < nvars && budget > 0; ++i) {
            unsigned k = static_cast<unsigned>(rng.below(static_cast<std::uint64_t>(budget + 1)));
            e[i] = k;
            budget -= static_cast<int>(k);
        }
        p.add_term(e, random_rat(rng));
    }
    return p;
}

/// Random nonzero homogeneous polynomial of the exact total degree given,
/// with small integer coefficients (some monomials dropped at random).
inline MultiPoly random_form(Rng& rng, int degree) {
    while (true) {
        MultiPoly p(3);
        for (int e1 = 0; e1 <= degree; ++e1) {
            for (int e2 = 0; e1 + e2 <= degree; ++e2) {
                long c = rng.range(-9, 9);
                if (c == 0) continue;
                p.add_term({static_cast<unsigned>(e1), static_cast<unsigned>(e2),
                            static_cast<unsigned>(degree - e1 - e2)},
                           Rat(c));
            }
        }
        if (!p.is_zero()) return p;
    }
}

inline std::vector<Rat> random_point(Rng& rng, int nvars) {
    std::vector<Rat> pt(nvars);
    for (auto& v : pt) v = random_rat(rng, 7, 2);
    return pt;
}

}  // namespace testutil
