#include "kulsurf/plane_curves.hpp"

#include <numeric>
#include <stdexcept>

#include "kulsurf/polygcd.hpp"

namespace kulsurf {

namespace {

/// Expansion of f in the affine chart of the first nonzero coordinate of p,
/// translated so p sits at the origin. Chart coordinates are the two
/// remaining variables in increasing order, scaled by the pivot coordinate.
MultiPoly local_form(const MultiPoly& f, const ProjPoint& p) {
    const int chart = p.first_nonzero_index();
    const Rat pivot{p[chart]};
    std::vector<MultiPoly> images(3, MultiPoly(2));
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == chart) {
            images[i] = MultiPoly::constant(2, 1);
        } else {
            images[i] = MultiPoly::variable(2, next) + MultiPoly::constant(2, Rat(p[i]) / pivot);
            ++next;
        }
    }
    return f.substitute(images);
}

int min_term_degree(const MultiPoly& f) {
    int best = -1;
    for (const auto& [e, c] : f.terms()) {
        const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        if (best < 0 || d < best) best = d;
    }
    return best;
}

MultiPoly homogeneous_component(const MultiPoly& f, int degree) {
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) == degree) out.add_term(e, c);
    }
    return out;
}

Rat coeff_of(const MultiPoly& f, Exps e) {
    auto it = f.terms().find(e);
    return it == f.terms().end() ? Rat(0) : it->second;
}

/// Determinant of the symmetric matrix of a three-variable quadratic form.
/// Nonzero exactly when the conic is smooth, equivalently irreducible over
/// the closure.
Rat conic_determinant(const MultiPoly& f) {
    const Rat a = coeff_of(f, {2, 0, 0});
    const Rat d = coeff_of(f, {0, 2, 0});
    const Rat ff = coeff_of(f, {0, 0, 2});
    const Rat b = coeff_of(f, {1, 1, 0}) / 2;
    const Rat c = coeff_of(f, {1, 0, 1}) / 2;
    const Rat e = coeff_of(f, {0, 1, 1}) / 2;
    return a * (d * ff - e * e) - b * (b * ff - e * c) + c * (b * e - d * c);
}

/// Exact irreducibility decision for a squarefree cubic form.
///
/// Smooth cubics are irreducible. A singular irreducible cubic has exactly
/// one singular point (a line through two double points would meet it with
/// total multiplicity four), which is therefore fixed by conjugation and
/// rational; so a singular cubic with no rational singular point is
/// reducible. At a rational singular point: multiplicity three means three
/// concurrent lines; at multiplicity two, write the local expansion as
/// quadratic part plus cubic part. A factorization of the cubic gives those
/// two parts a shared linear factor at every double point, and conversely a
/// shared factor makes the local expansion — hence the cubic — split.
Irreducibility decide_cubic(const MultiPoly& f) {
    const MultiPoly d1 = f.derivative(0);
    const MultiPoly d2 = f.derivative(1);
    const MultiPoly d3 = f.derivative(2);
    if (!exists_common_zero(d1, d2, d3)) return Irreducibility::Verified;

    const auto singular = rational_common_zeros(d1, d2, d3);
    if (singular.empty()) return Irreducibility::Reducible;

    const MultiPoly loc = local_form(f, singular.front());
    const int m = min_term_degree(loc);
    if (m >= 3) return Irreducibility::Reducible;
    if (m != 2) throw std::logic_error("singular point with multiplicity below two");
    const MultiPoly quadratic = homogeneous_component(loc, 2);
    const MultiPoly cubic = homogeneous_component(loc, 3);
    return poly_gcd(quadratic, cubic).is_constant() ? Irreducibility::Verified
                                                    : Irreducibility::Reducible;
}

Irreducibility decide(const MultiPoly& f) {
    switch (f.total_degree()) {
        case 1: return Irreducibility::Verified;
        case 2:
            return conic_determinant(f) != 0 ? Irreducibility::Verified
                                             : Irreducibility::Reducible;
        case 3: return decide_cubic(f);
        default: return Irreducibility::Asserted;
    }
}

}  // namespace

PlaneCurve::PlaneCurve(const MultiPoly& form) {
    if (form.nvars() != 3)
        throw std::invalid_argument("plane curve: needs three variables");
    if (form.is_zero() || !form.is_homogeneous() || form.total_degree() < 1)
        throw std::invalid_argument("plane curve: needs a form of positive degree");
    if (!is_squarefree(form))
        throw std::invalid_argument("plane curve: needs a squarefree form");
    form_ = form.primitive_scaled();
    degree_ = form_.total_degree();
    irreducibility_ = decide(form_);
}

bool PlaneCurve::contains(const ProjPoint& p) const { return form_.evaluate(p.coords()) == 0; }

int PlaneCurve::multiplicity_at(const ProjPoint& p) const {
    return min_term_degree(local_form(form_, p));
}

HomogeneousForm PlaneCurve::tangent_cone(const ProjPoint& p) const {
    const MultiPoly loc = local_form(form_, p);
    return HomogeneousForm(homogeneous_component(loc, min_term_degree(loc)));
}

bool PlaneCurve::is_node(const ProjPoint& p) const {
    if (multiplicity_at(p) != 2) return false;
    const MultiPoly cone = tangent_cone(p).poly;
    const Rat a = coeff_of(cone, {2, 0});
    const Rat b = coeff_of(cone, {1, 1});
    const Rat c = coeff_of(cone, {0, 2});
    return b * b - 4 * a * c != 0;  // two distinct tangent directions
}

Irreducibility irreducibility_check(const PlaneCurve& c) { return c.irreducibility(); }

bool is_smooth_curve(const PlaneCurve& c) {
    const MultiPoly& f = c.form();
    return !exists_common_zero(f.derivative(0), f.derivative(1), f.derivative(2));
}

int intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& p) {
    return intersection_multiplicity_at(a.form(), b.form(), p);
}

IntersectionCycle intersection_cycle(const PlaneCurve& a, const PlaneCurve& b,
                                     std::uint64_t seed) {
    return intersect_forms(a.form(), b.form(), seed);
}

}  // namespace kulsurf
