#pragma once

#include <vector>

#include "kulsurf/rational.hpp"
#include "kulsurf/unipoly.hpp"

namespace kulsurf {

/// All rational roots of a nonzero univariate polynomial, ascending, each
/// verified by exact evaluation. Multiplicities are not reported; pair with
/// squarefree_decomposition when they matter.
///
/// Method: roots modulo a prime p chosen so the squarefree part stays
/// squarefree mod p, Newton-lifted to p^(2^k) past twice the square of the
/// coefficient-derived root bound, then rational reconstruction. Complete:
/// every rational root survives reduction mod such a p.
std::vector<Rat> rational_roots(const UniPoly& p);

}  // namespace kulsurf
