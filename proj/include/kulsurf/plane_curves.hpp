#pragma once

#include <cstdint>

#include "kulsurf/intersection.hpp"
#include "kulsurf/multipoly.hpp"
#include "kulsurf/projective.hpp"

namespace kulsurf {

/// Outcome of the built-in irreducibility decision over the algebraic
/// closure. Degrees up to three are decided exactly; higher degrees are
/// accepted on trust and marked Asserted.
enum class Irreducibility { Verified, Reducible, Asserted };

/// A reduced plane curve: a squarefree form of positive degree in three
/// variables, stored integer-primitive with positive leading coefficient.
/// Irreducibility over the closure is decided at construction for degrees
/// up to three.
class PlaneCurve {
  public:
    /// Throws std::invalid_argument unless `form` is a squarefree form of
    /// positive degree in three variables.
    explicit PlaneCurve(const MultiPoly& form);

    const MultiPoly& form() const { return form_; }
    int degree() const { return degree_; }
    Irreducibility irreducibility() const { return irreducibility_; }

    bool contains(const ProjPoint& p) const;

    /// Multiplicity of the curve at p: the lowest total degree appearing in
    /// the local expansion of the defining form around p. Zero when p is
    /// not on the curve, one at a smooth point.
    int multiplicity_at(const ProjPoint& p) const;

    /// Lowest-degree homogeneous part of the local expansion around p, a
    /// form in the two affine chart coordinates (taken in increasing
    /// variable order, scaled so the chart coordinate of p equals one).
    /// Its degree equals multiplicity_at(p).
    HomogeneousForm tangent_cone(const ProjPoint& p) const;

    /// True when p is an ordinary double point: multiplicity two with two
    /// distinct tangent directions over the closure (the degree-two tangent
    /// cone has nonzero discriminant).
    bool is_node(const ProjPoint& p) const;

  private:
    MultiPoly form_;
    int degree_ = 0;
    Irreducibility irreducibility_ = Irreducibility::Asserted;
};

/// Reports the constructor-computed irreducibility status.
Irreducibility irreducibility_check(const PlaneCurve& c);

/// True when the curve has no singular point over the algebraic closure,
/// i.e. the three partial derivatives of its form never vanish together.
bool is_smooth_curve(const PlaneCurve& c);

/// Intersection multiplicity of the two curves at p; zero when p is not on
/// both. Throws std::domain_error if the curves share a component through p.
int intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& p);

/// Full intersection cycle of the two curves; see intersect_forms. Throws
/// std::domain_error if the curves share a component.
IntersectionCycle intersection_cycle(const PlaneCurve& a, const PlaneCurve& b, std::uint64_t seed);

}  // namespace kulsurf
