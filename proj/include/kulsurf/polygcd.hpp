#pragma once

#include "kulsurf/multipoly.hpp"

namespace kulsurf {

/// Multivariate gcd over Q by the primitive polynomial remainder sequence,
/// recursing on the variable count (univariate base case). The result is
/// integer-primitive with positive grlex-leading coefficient; nonzero
/// constants are returned as 1, and gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// True when a and b share a factor of positive degree.
bool have_common_factor(const MultiPoly& a, const MultiPoly& b);

/// True when f has no repeated factor of positive degree.
bool is_squarefree(const MultiPoly& f);

}  // namespace kulsurf
