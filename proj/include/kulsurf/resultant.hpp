#pragma once

#include <vector>

#include "kulsurf/multipoly.hpp"

namespace kulsurf {

/// Determinant of a square polynomial matrix by fraction-free Bareiss
/// elimination; every interior division is exact by the Sylvester identity.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester resultant of f and g with respect to variable `var`. The result
/// does not involve `var`. Conventions: res(f, g) = g^deg_var(f) when g is
/// constant in var (symmetrically for f), and 1 when both are. Throws when
/// both inputs are zero.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

}  // namespace kulsurf
