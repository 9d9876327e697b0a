#pragma once

#include <vector>

#include "kulsurf/plane_curves.hpp"
#include "kulsurf/projective.hpp"
#include "kulsurf/rational.hpp"

namespace kulsurf {

/// Divisor class l*L + e*E on the plane blown up in one point, written in
/// the basis L (pullback of a line) and E (the exceptional curve), with
/// intersection numbers L.L = 1, E.E = -1, L.E = 0.
struct DivisorClass {
    Int l{0};
    Int e{0};

    bool operator==(const DivisorClass& o) const { return l == o.l && e == o.e; }
};

/// Intersection number of two divisor classes: a.l*b.l - a.e*b.e.
Int pair(const DivisorClass& a, const DivisorClass& b);

/// Class d*L - m*E of the strict transform of a degree-d curve passing with
/// multiplicity m through the blown-up point.
DivisorClass strict_transform_class(int degree, int multiplicity);

/// Numerical data of a surface obtained by blowing up one point of the
/// plane and removing the strict transforms of two distinct irreducible
/// curves of degrees d1, d2 that pass through the point with multiplicities
/// m1, m2. Valid data satisfies di >= 1, 0 <= mi <= di, mi < di whenever
/// di >= 2 (an irreducible curve of degree at least two has no point of
/// full degree), and m1 + m2 >= 1 (the point lies on the removed locus).
struct SurfaceSpec {
    int d1 = 1;
    int m1 = 0;
    int d2 = 1;
    int m2 = 0;

    /// Throws std::invalid_argument when the constraints above fail.
    void validate() const;

    bool operator==(const SurfaceSpec& o) const {
        return d1 == o.d1 && m1 == o.m1 && d2 == o.d2 && m2 == o.m2;
    }
};

/// True when the complement of the two strict transforms is affine. On
/// valid data this happens unless both curves are lines through the point.
/// Validates its input.
bool is_affine(const SurfaceSpec& spec);

/// Independent affineness criterion: the boundary class B = (d1+d2)L -
/// (m1+m2)E must have positive self-intersection and meet every irreducible
/// curve positively; the binding cases are the exceptional curve and the
/// strict transform of a line through the point. Validates its input.
bool nakai_affine_test(const SurfaceSpec& spec);

/// Determinant d1*m2 - d2*m1 of the lattice spanned by the two boundary
/// classes, sign included. No validation.
Int determinant(const SurfaceSpec& spec);

/// Self-intersection (d1+d2)^2 - (m1+m2)^2 of the total boundary class.
/// No validation.
Int boundary_self_intersection(const SurfaceSpec& spec);

/// Invariant factors [s1, s2] of the quotient of the intersection lattice
/// by the two boundary classes: the Smith form diagonal of
/// [[d1, -m1], [d2, -m2]], with s1 dividing s2 and 0 marking a free factor.
/// [1, 1] means the quotient group is trivial. No validation.
std::vector<Int> picard_group(const SurfaceSpec& spec);

/// True when the surface is affine with trivial divisor class group, i.e.
/// every height-one prime is principal. Validates its input.
bool is_factorial(const SurfaceSpec& spec);

/// Numerical invariants of one surface, cross-checked internally.
struct ClassificationReport {
    SurfaceSpec spec;
    Int determinant{0};
    bool affine = false;
    bool factorial = false;
    std::vector<Int> picard_invariants;
    Int self_intersection_sum{0};
};

/// Computes all invariants for the spec, checking the two independent
/// affineness criteria against each other and the determinant against the
/// invariant factors; disagreement throws std::logic_error. Validates its
/// input.
ClassificationReport classify(const SurfaceSpec& spec);

/// Reads the spec off two concrete curves and a point: degrees and local
/// multiplicities at p. Requires both curves irreducible (Verified or
/// Asserted), with no shared component, and p on their union; otherwise
/// throws std::domain_error. The result is validated.
SurfaceSpec spec_from_curves(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p);

}  // namespace kulsurf
