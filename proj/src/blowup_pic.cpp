#include "kulsurf/blowup_pic.hpp"

#include <cstdlib>
#include <stdexcept>

#include "kulsurf/intmatrix.hpp"
#include "kulsurf/polygcd.hpp"

namespace kulsurf {

Int pair(const DivisorClass& a, const DivisorClass& b) { return a.l * b.l - a.e * b.e; }

DivisorClass strict_transform_class(int degree, int multiplicity) {
    return {Int(degree), Int(-multiplicity)};
}

void SurfaceSpec::validate() const {
    const auto check_curve = [](int d, int m) {
        if (d < 1) throw std::invalid_argument("surface spec: degree below one");
        if (m < 0 || m > d) throw std::invalid_argument("surface spec: multiplicity outside [0, degree]");
        if (d >= 2 && m == d)
            throw std::invalid_argument("surface spec: full multiplicity on a degree >= 2 curve");
    };
    check_curve(d1, m1);
    check_curve(d2, m2);
    if (m1 + m2 < 1)
        throw std::invalid_argument("surface spec: the point must lie on a removed curve");
}

bool is_affine(const SurfaceSpec& spec) {
    spec.validate();
    return !(spec.d1 == 1 && spec.m1 == 1 && spec.d2 == 1 && spec.m2 == 1);
}

bool nakai_affine_test(const SurfaceSpec& spec) {
    spec.validate();
    const int d = spec.d1 + spec.d2;
    const int m = spec.m1 + spec.m2;
    return d * d - m * m > 0 && m > 0 && d - m > 0;
}

Int determinant(const SurfaceSpec& spec) {
    return Int(spec.d1) * spec.m2 - Int(spec.d2) * spec.m1;
}

Int boundary_self_intersection(const SurfaceSpec& spec) {
    const DivisorClass b{Int(spec.d1 + spec.d2), Int(-(spec.m1 + spec.m2))};
    return pair(b, b);
}

std::vector<Int> picard_group(const SurfaceSpec& spec) {
    IntMatrix2 m{Int(spec.d1), Int(-spec.m1), Int(spec.d2), Int(-spec.m2)};
    auto snf = smith_normal_form(m);
    return {snf.d.at(0, 0), snf.d.at(1, 1)};
}

bool is_factorial(const SurfaceSpec& spec) {
    spec.validate();
    return is_affine(spec) && abs(determinant(spec)) == 1;
}

ClassificationReport classify(const SurfaceSpec& spec) {
    spec.validate();
    ClassificationReport report;
    report.spec = spec;
    report.determinant = determinant(spec);
    report.affine = is_affine(spec);
    if (nakai_affine_test(spec) != report.affine)
        throw std::logic_error("classify: the affineness criteria disagree");
    report.picard_invariants = picard_group(spec);
    const bool trivial = report.picard_invariants == std::vector<Int>{Int(1), Int(1)};
    if ((abs(report.determinant) == 1) != trivial)
        throw std::logic_error("classify: determinant and invariant factors disagree");
    report.factorial = is_factorial(spec);
    report.self_intersection_sum = boundary_self_intersection(spec);
    return report;
}

SurfaceSpec spec_from_curves(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p) {
    for (const auto* c : {&c1, &c2}) {
        if (c->irreducibility() == Irreducibility::Reducible)
            throw std::domain_error("spec_from_curves: a removed curve is reducible");
    }
    if (have_common_factor(c1.form(), c2.form()))
        throw std::domain_error("spec_from_curves: the curves share a component");
    if (!c1.contains(p) && !c2.contains(p))
        throw std::domain_error("spec_from_curves: the point misses both curves");
    SurfaceSpec spec{c1.degree(), c1.multiplicity_at(p), c2.degree(), c2.multiplicity_at(p)};
    spec.validate();
    return spec;
}

}  // namespace kulsurf
