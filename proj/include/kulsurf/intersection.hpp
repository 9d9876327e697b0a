#pragma once

#include <cstdint>
#include <vector>

#include "kulsurf/multipoly.hpp"
#include "kulsurf/projective.hpp"
#include "kulsurf/unipoly.hpp"

namespace kulsurf {

/// A rational intersection point together with its intersection multiplicity.
struct RationalIntersectionPoint {
    ProjPoint point;
    int multiplicity = 0;
};

/// A Galois-stable cluster of non-rational intersection points sharing one
/// multiplicity. In the frame sheared by (alpha, beta) — the substitution
/// (X1, X2, X3) -> (X1 + alpha*X3, X2 + beta*X3, X3) — each root t of
/// min_poly singles out the line (X1 - alpha*X3) - t*(X2 - beta*X3) = 0,
/// which meets the intersection in exactly one point of the cluster.
struct ConjugatePointClass {
    std::vector<Int> min_poly;  // ascending, integer-primitive, squarefree, no rational roots
    Int shear_alpha{0};
    Int shear_beta{0};
    int size = 0;          // degree of min_poly = number of points in the cluster
    int multiplicity = 0;  // intersection multiplicity of each point in the cluster
};

/// Full intersection cycle of two coprime forms over the algebraic closure:
/// rational points listed individually, non-rational points grouped into one
/// cluster per multiplicity level. Invariants: the multiplicities (counted
/// with cluster sizes) sum to deg(f) * deg(g), and the number of distinct
/// points equals distinct_points, which is certified exactly rather than
/// bounded.
struct IntersectionCycle {
    std::vector<RationalIntersectionPoint> rational_points;  // sorted by point
    std::vector<ConjugatePointClass> conjugate_classes;      // ascending multiplicity
    int total_multiplicity = 0;  // deg(f) * deg(g)
    int distinct_points = 0;     // number of distinct points over the closure
    Int shear_alpha{0};          // reporting frame shared by all clusters
    Int shear_beta{0};
};

/// Computes the intersection cycle of two coprime homogeneous polynomials in
/// three variables, each of positive degree. The point count over the
/// closure is established by scanning a family of projection centers large
/// enough that at least one must be valid and injective on the intersection;
/// the reporting frame is then drawn from `seed` and checked against that
/// certified count, so equal seeds give byte-identical cycles.
/// Throws std::invalid_argument for inputs that are not positive-degree
/// forms in three variables, std::domain_error when f and g share a factor.
IntersectionCycle intersect_forms(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed);

/// Intersection multiplicity of f and g at the point p, via the standard
/// recursive reduction of restrictions to a line through p. Returns 0 when p
/// is not on both curves. Throws std::domain_error when f and g share a
/// component passing through p (the multiplicity is infinite there).
int intersection_multiplicity_at(const MultiPoly& f, const MultiPoly& g, const ProjPoint& p);

/// Decides whether g1 = g2 = g3 = 0 has a solution over the algebraic
/// closure. Zero forms impose no condition; a nonzero constant form is never
/// zero. Exact for arbitrary forms in three variables.
bool exists_common_zero(const MultiPoly& g1, const MultiPoly& g2, const MultiPoly& g3);

/// All rational points p with g1(p) = g2(p) = g3(p) = 0. Complete: every
/// rational solution is returned (non-rational ones are ignored). Throws
/// std::domain_error when the solution set is not finite, and
/// std::invalid_argument when all three forms are zero.
std::vector<ProjPoint> rational_common_zeros(const MultiPoly& g1, const MultiPoly& g2,
                                             const MultiPoly& g3);

/// The full common zero set of the three forms, certified finite and
/// entirely rational: the number of returned points is proven equal to the
/// number of solutions over the algebraic closure. Throws std::domain_error
/// when the set is infinite or some solution is non-rational, and
/// std::invalid_argument when all three forms are zero.
std::vector<ProjPoint> certified_rational_zero_set(const MultiPoly& g1, const MultiPoly& g2,
                                                   const MultiPoly& g3);

}  // namespace kulsurf
