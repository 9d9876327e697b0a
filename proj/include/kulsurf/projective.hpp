#pragma once

#include <string>
#include <vector>

#include "kulsurf/rational.hpp"

namespace kulsurf {

/// A point of the projective plane with rational coordinates, stored as the
/// canonical integer representative: coprime coordinates, not all zero, with
/// the first nonzero coordinate positive. Canonicality makes operator== and
/// operator< coordinate-wise, so points work directly as set and map keys.
struct ProjPoint {
    Int x1{0}, x2{0}, x3{0};

    /// Canonicalizes the given integer triple. Throws if all are zero.
    ProjPoint(Int a, Int b, Int c);

    /// Clears denominators, then canonicalizes. Throws if all are zero.
    ProjPoint(const Rat& a, const Rat& b, const Rat& c);

    const Int& operator[](int i) const;

    /// Index in {0,1,2} of the first nonzero coordinate.
    int first_nonzero_index() const;

    /// Coordinates as rationals, for evaluating polynomials at the point.
    std::vector<Rat> coords() const;

    /// Renders "(a:b:c)".
    std::string to_string() const;

    bool operator==(const ProjPoint& o) const {
        return x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
    }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
};

}  // namespace kulsurf
