#include "kulsurf/intersection.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "kulsurf/polygcd.hpp"
#include "kulsurf/ratroots.hpp"
#include "kulsurf/resultant.hpp"
#include "kulsurf/rng.hpp"

namespace kulsurf {

namespace {

void require_form(const MultiPoly& f, const char* what) {
    if (f.nvars() != 3) throw std::invalid_argument(std::string(what) + ": needs three variables");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 1)
        throw std::invalid_argument(std::string(what) + ": needs a form of positive degree");
}

/// f with every repeated factor reduced to multiplicity one; integer-primitive.
MultiPoly form_squarefree_part(const MultiPoly& f) {
    MultiPoly d = poly_gcd(poly_gcd(f.derivative(0), f.derivative(1)), f.derivative(2));
    d = poly_gcd(f, d);
    if (d.is_constant()) return f.primitive_scaled();
    auto q = f.divided_exact(d);
    if (!q) throw std::logic_error("repeated-factor division was not exact");
    return q->primitive_scaled();
}

/// f(t, t^2 + j, 1) as a univariate polynomial in t: the restriction of f to
/// the rational parametrization of the conic X1^2 + j*X3^2 - X2*X3 = 0.
UniPoly conic_pullback(const MultiPoly& f, const Int& j) {
    MultiPoly t = MultiPoly::variable(1, 0);
    auto r = f.substitute({t, t * t + MultiPoly::constant(1, Rat(j)), MultiPoly::constant(1, 1)});
    return UniPoly::from_multipoly(r, 0);
}

/// Smallest j >= 0 such that no form in `forms` vanishes on the whole conic
/// X1^2 + j*X3^2 - X2*X3 = 0. Distinct j give distinct irreducible conics,
/// and a product of total degree D has at most D/2 conic factors, so the
/// search ends by j = D/2 + 1.
Int choose_conic_offset(const std::vector<const MultiPoly*>& forms) {
    int total = 0;
    for (const auto* f : forms) total += f->total_degree();
    for (Int j(0); j <= total + 1; ++j) {
        bool ok = true;
        for (const auto* f : forms) {
            if (conic_pullback(*f, j).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) return j;
    }
    throw std::logic_error("conic family exhausted without a transversal member");
}

/// The resultant in Z of f(t + a*Z, 1 + b*Z, Z) and g(t + a*Z, 1 + b*Z, Z),
/// as a univariate polynomial in t. For a valid center (a, b) — one lying on
/// neither curve — its roots are the images of the intersection points under
/// projection from (a : b : 1), and each root's multiplicity is the sum of
/// the intersection multiplicities in its fiber.
UniPoly projected_resultant(const MultiPoly& f, const MultiPoly& g, const Int& a, const Int& b) {
    MultiPoly t = MultiPoly::variable(2, 0);
    MultiPoly z = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> images = {t + Rat(a) * z, MultiPoly::constant(2, 1) + Rat(b) * z, z};
    MultiPoly rf = f.substitute(images);
    MultiPoly rg = g.substitute(images);
    return UniPoly::from_multipoly(resultant(rf, rg, 1), 0);
}

/// Number of distinct projection images of the union of the pairwise
/// intersections, from the center (a : b : 1): distinct finite images are
/// the distinct roots of the product of the projected resultants, plus one
/// shared image at infinity when any resultant drops below full degree.
/// This never exceeds the number of distinct points in the union, with
/// equality exactly when the projection is injective on the union.
int shadow_count(const std::vector<std::pair<const MultiPoly*, const MultiPoly*>>& pairs,
                 const Int& a, const Int& b) {
    UniPoly prod = UniPoly::constant(Rat(1));
    bool at_infinity = false;
    for (const auto& [f, g] : pairs) {
        UniPoly rho = projected_resultant(*f, *g, a, b);
        if (rho.degree() < f->total_degree() * g->total_degree()) at_infinity = true;
        prod = prod * rho;
    }
    return squarefree_part(prod).degree() + (at_infinity ? 1 : 0);
}

struct SeparationCertificate {
    int count = -1;  // exact number of distinct points in the union of the pairwise intersections
    Int alpha{0};    // a center achieving that count (hence injective on the union)
    Int beta{0};
};

/// Certifies the exact number of distinct points in the union of the given
/// pairwise intersections by scanning centers (k : k^2 + j : 1), k = 0..N-1,
/// on a fixed smooth conic. With B the Bezout bound for the union and D the
/// total degree of `validity`: a line meets the conic at most twice, so the
/// at most B(B-1)/2 lines through two union points invalidate at most
/// B(B-1) centers, and centers lying on some curve are roots of degree-2D
/// restrictions; N = B(B-1) + 2D + 1 therefore guarantees a center that is
/// valid and injective on the union, where the image count equals the point
/// count and is maximal over the scan.
SeparationCertificate certify_separation(
    const std::vector<const MultiPoly*>& validity,
    const std::vector<std::pair<const MultiPoly*, const MultiPoly*>>& pairs) {
    int bezout = 0;
    for (const auto& [f, g] : pairs) bezout += f->total_degree() * g->total_degree();
    int total_degree = 0;
    for (const auto* f : validity) total_degree += f->total_degree();

    const Int j = choose_conic_offset(validity);
    std::vector<UniPoly> pullbacks;
    pullbacks.reserve(validity.size());
    for (const auto* f : validity) pullbacks.push_back(conic_pullback(*f, j));

    const long n = static_cast<long>(bezout) * (bezout - 1) + 2L * total_degree + 1;
    SeparationCertificate best;
    for (long k = 0; k < n; ++k) {
        const Rat kv{Int(k)};
        bool valid = true;
        for (const auto& p : pullbacks) {
            if (p.evaluate(kv) == 0) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        Int alpha(k);
        Int beta = alpha * alpha + j;
        int c = shadow_count(pairs, alpha, beta);
        if (c > best.count) best = {c, alpha, beta};
        if (best.count == bezout) break;  // cannot be exceeded, so already injective
    }
    if (best.count < 1) throw std::logic_error("no valid center in the certification family");
    return best;
}

bool center_valid(const MultiPoly& f, const MultiPoly& g, const Int& a, const Int& b) {
    const std::vector<Rat> c = {Rat(a), Rat(b), Rat(1)};
    return f.evaluate(c) != 0 && g.evaluate(c) != 0;
}

/// f(y1 + a*Z, y2 + b*Z, Z) as a univariate polynomial in Z: the restriction
/// of the sheared form to the line over the image point (y1 : y2).
UniPoly fiber_slice(const MultiPoly& f, const Int& a, const Int& b, const Rat& y1, const Rat& y2) {
    MultiPoly z = MultiPoly::variable(1, 0);
    auto r = f.substitute({MultiPoly::constant(1, y1) + Rat(a) * z,
                           MultiPoly::constant(1, y2) + Rat(b) * z, z});
    return UniPoly::from_multipoly(r, 0);
}

/// The unique intersection point over the image (y1 : y2), for a center that
/// is injective on the intersection. Throws std::logic_error if the fiber
/// turns out not to be a single point, which would contradict injectivity.
ProjPoint lift_point(const MultiPoly& f, const MultiPoly& g, const Int& a, const Int& b,
                     const Rat& y1, const Rat& y2) {
    UniPoly h = gcd(fiber_slice(f, a, b, y1, y2), fiber_slice(g, a, b, y1, y2));
    UniPoly reduced = squarefree_part(h);
    if (reduced.degree() != 1)
        throw std::logic_error("projection center is not injective on the intersection");
    Rat s = -reduced[0] / reduced[1];
    return ProjPoint(y1 + Rat(a) * s, y2 + Rat(b) * s, s);
}

/// Builds the cycle in the frame of a center already known to be valid and
/// injective on the intersection, with `certified` distinct points in total.
IntersectionCycle build_cycle(const MultiPoly& f, const MultiPoly& g, const Int& a, const Int& b,
                              int certified) {
    IntersectionCycle cycle;
    cycle.shear_alpha = a;
    cycle.shear_beta = b;
    const int bezout = f.total_degree() * g.total_degree();
    cycle.total_multiplicity = bezout;
    cycle.distinct_points = certified;

    UniPoly rho = projected_resultant(f, g, a, b);
    const int infinity_mult = bezout - rho.degree();

    for (const auto& [factor, mult] : squarefree_decomposition(rho)) {
        UniPoly residual = factor;
        for (const Rat& root : rational_roots(factor)) {
            cycle.rational_points.push_back({lift_point(f, g, a, b, root, Rat(1)), mult});
            residual = residual.divided_exact(UniPoly({-root, Rat(1)}));
        }
        if (residual.degree() == 1) throw std::logic_error("rational root left in residual factor");
        if (residual.degree() >= 2) {
            ConjugatePointClass cls;
            cls.min_poly = residual.int_primitive();
            cls.shear_alpha = a;
            cls.shear_beta = b;
            cls.size = residual.degree();
            cls.multiplicity = mult;
            cycle.conjugate_classes.push_back(cls);
        }
    }
    if (infinity_mult > 0) {
        cycle.rational_points.push_back(
            {lift_point(f, g, a, b, Rat(1), Rat(0)), infinity_mult});
    }

    std::sort(cycle.rational_points.begin(), cycle.rational_points.end(),
              [](const RationalIntersectionPoint& l, const RationalIntersectionPoint& r) {
                  return l.point < r.point;
              });

    int mult_sum = 0;
    int point_sum = 0;
    for (const auto& rp : cycle.rational_points) {
        mult_sum += rp.multiplicity;
        point_sum += 1;
    }
    for (const auto& cls : cycle.conjugate_classes) {
        mult_sum += cls.size * cls.multiplicity;
        point_sum += cls.size;
    }
    if (mult_sum != bezout) throw std::logic_error("cycle multiplicities do not sum to the degree product");
    if (point_sum != certified) throw std::logic_error("cycle point count disagrees with the certificate");
    return cycle;
}

/// Rational members of the intersection of two coprime forms. Every lift at
/// a rational image is rational, and a point with a non-rational image is
/// itself non-rational, so lifting exactly the rational images is complete.
std::vector<ProjPoint> rational_points_of_pair(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly sf = form_squarefree_part(f);
    MultiPoly sg = form_squarefree_part(g);
    if (have_common_factor(sf, sg))
        throw std::domain_error("rational_common_zeros: the solution set contains a curve");
    auto cert = certify_separation({&sf, &sg}, {{&sf, &sg}});
    auto cycle = build_cycle(sf, sg, cert.alpha, cert.beta, cert.count);
    std::vector<ProjPoint> out;
    out.reserve(cycle.rational_points.size());
    for (const auto& rp : cycle.rational_points) out.push_back(rp.point);
    return out;
}

/// All points of the intersection of two coprime forms, certified rational:
/// throws std::domain_error when the intersection has a non-rational member.
std::vector<ProjPoint> fully_rational_pair(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly sf = form_squarefree_part(f);
    MultiPoly sg = form_squarefree_part(g);
    if (have_common_factor(sf, sg))
        throw std::domain_error("certified_rational_zero_set: the solution set contains a curve");
    auto cert = certify_separation({&sf, &sg}, {{&sf, &sg}});
    auto cycle = build_cycle(sf, sg, cert.alpha, cert.beta, cert.count);
    if (!cycle.conjugate_classes.empty())
        throw std::domain_error("certified_rational_zero_set: non-rational solutions");
    std::vector<ProjPoint> out;
    out.reserve(cycle.rational_points.size());
    for (const auto& rp : cycle.rational_points) out.push_back(rp.point);
    return out;
}

/// Collects the solutions of the (possibly reduced) system into `out`,
/// proving along the way that every solution over the closure is rational.
/// A nonzero constant entry makes the piece empty.
void collect_certified(std::vector<MultiPoly> active, std::set<ProjPoint>& out) {
    for (const auto& g : active)
        if (g.is_constant() && !g.is_zero()) return;
    active.erase(std::remove_if(active.begin(), active.end(),
                                [](const MultiPoly& g) { return g.is_zero(); }),
                 active.end());
    if (active.size() < 2)
        throw std::domain_error("certified_rational_zero_set: the solution set is not finite");

    if (active.size() == 2) {
        for (const auto& p : fully_rational_pair(active[0], active[1])) out.insert(p);
        return;
    }

    // With a shared factor d of two forms, the solutions split into the
    // points of V(d) on the third curve — all of them solutions of the full
    // system — plus the solutions of the reduced triple.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            MultiPoly d = poly_gcd(active[i], active[j]);
            if (d.is_constant()) continue;
            const int k = 3 - i - j;
            if (!poly_gcd(d, active[k]).is_constant())
                throw std::domain_error(
                    "certified_rational_zero_set: the solution set contains a curve");
            for (const auto& p : fully_rational_pair(form_squarefree_part(d), active[k]))
                out.insert(p);
            auto qi = active[i].divided_exact(d);
            auto qj = active[j].divided_exact(d);
            if (!qi || !qj) throw std::logic_error("shared-factor division was not exact");
            collect_certified({*qi, *qj, active[k]}, out);
            return;
        }
    }

    // Pairwise coprime: count the solutions over the closure through an
    // injective projection of the union of the pairwise intersections — the
    // solutions are exactly the shared images of the three resultants, plus
    // one at infinity when all three drop degree — and compare with the
    // number of rational solutions.
    std::vector<const MultiPoly*> ptrs = {&active[0], &active[1], &active[2]};
    std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs = {
        {ptrs[0], ptrs[1]}, {ptrs[0], ptrs[2]}, {ptrs[1], ptrs[2]}};
    auto cert = certify_separation(ptrs, pairs);
    std::vector<UniPoly> rhos;
    bool all_drop = true;
    for (const auto& [f, g] : pairs) {
        UniPoly rho = projected_resultant(*f, *g, cert.alpha, cert.beta);
        if (rho.degree() == f->total_degree() * g->total_degree()) all_drop = false;
        rhos.push_back(rho);
    }
    UniPoly common = gcd(gcd(rhos[0], rhos[1]), rhos[2]);
    const int closure_count = squarefree_part(common).degree() + (all_drop ? 1 : 0);

    int rational_count = 0;
    for (const auto& p : rational_points_of_pair(active[0], active[1])) {
        if (active[2].evaluate(p.coords()) == 0) {
            out.insert(p);
            ++rational_count;
        }
    }
    if (rational_count != closure_count)
        throw std::domain_error("certified_rational_zero_set: non-rational solutions");
}

/// F(x, 0) as a univariate polynomial, for F in two variables.
UniPoly axis_restriction(const MultiPoly& F) {
    auto r = F.substitute({MultiPoly::variable(1, 0), MultiPoly::constant(1, 0)});
    return UniPoly::from_multipoly(r, 0);
}

/// Intersection multiplicity at the origin of two coprime polynomials in two
/// variables. Invariant under adding a multiple of one input to the other
/// and additive across factors, which drives the reduction: shrink the
/// higher-degree axis restriction until one restriction vanishes, then split
/// off the axis factor and recurse on a pair of strictly smaller total
/// intersection number.
int origin_multiplicity(MultiPoly F, MultiPoly G) {
    const std::vector<Rat> origin = {Rat(0), Rat(0)};
    const MultiPoly y = MultiPoly::variable(2, 1);
    while (true) {
        if (F.evaluate(origin) != 0 || G.evaluate(origin) != 0) return 0;
        UniPoly r = axis_restriction(F);
        UniPoly s = axis_restriction(G);
        if (r.is_zero() && s.is_zero())
            throw std::logic_error("both restrictions vanish for a coprime pair");
        if (r.is_zero()) {
            auto h = F.divided_exact(y);
            if (!h) throw std::logic_error("axis split division was not exact");
            return s.order_at_zero() + origin_multiplicity(*h, G);
        }
        if (s.is_zero()) {
            auto h = G.divided_exact(y);
            if (!h) throw std::logic_error("axis split division was not exact");
            return r.order_at_zero() + origin_multiplicity(F, *h);
        }
        if (r.degree() > s.degree()) {
            std::swap(F, G);
            std::swap(r, s);
        }
        Exps e(2, 0);
        e[0] = static_cast<unsigned>(s.degree() - r.degree());
        MultiPoly shift = MultiPoly::monomial(2, e, s.lc() / r.lc());
        G = G - shift * F;
    }
}

}  // namespace

IntersectionCycle intersect_forms(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed) {
    require_form(f, "intersect_forms");
    require_form(g, "intersect_forms");
    if (have_common_factor(f, g))
        throw std::domain_error("intersect_forms: the forms share a component");

    auto cert = certify_separation({&f, &g}, {{&f, &g}});

    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Int a(rng.range(-10000, 10000));
        Int b(rng.range(-10000, 10000));
        if (!center_valid(f, g, a, b)) continue;
        if (shadow_count({{&f, &g}}, a, b) != cert.count) continue;
        return build_cycle(f, g, a, b, cert.count);
    }
    throw std::runtime_error("intersect_forms: no injective reporting frame found");
}

int intersection_multiplicity_at(const MultiPoly& f, const MultiPoly& g, const ProjPoint& p) {
    require_form(f, "intersection_multiplicity_at");
    require_form(g, "intersection_multiplicity_at");

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
    MultiPoly F = f.substitute(images);
    MultiPoly G = g.substitute(images);

    MultiPoly h = poly_gcd(F, G);
    const std::vector<Rat> origin = {Rat(0), Rat(0)};
    if (!h.is_constant()) {
        if (h.evaluate(origin) == 0)
            throw std::domain_error(
                "intersection_multiplicity_at: shared component through the point");
        auto fq = F.divided_exact(h);
        auto gq = G.divided_exact(h);
        if (!fq || !gq) throw std::logic_error("shared-factor division was not exact");
        F = *fq;
        G = *gq;
    }
    return origin_multiplicity(std::move(F), std::move(G));
}

bool exists_common_zero(const MultiPoly& g1, const MultiPoly& g2, const MultiPoly& g3) {
    std::vector<const MultiPoly*> all = {&g1, &g2, &g3};
    std::vector<const MultiPoly*> active;
    for (const auto* g : all) {
        if (g->nvars() != 3) throw std::invalid_argument("exists_common_zero: needs three variables");
        if (g->is_constant()) {
            if (!g->is_zero()) return false;  // a nonzero constant is never zero
            continue;                         // a zero form imposes no condition
        }
        if (!g->is_homogeneous())
            throw std::invalid_argument("exists_common_zero: needs homogeneous inputs");
        active.push_back(g);
    }
    // One or two curves in the projective plane always intersect.
    if (active.size() <= 2) return true;

    // A shared factor gives a curve all of whose points satisfy two of the
    // equations; it meets the third curve, so a common zero exists.
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j)
            if (have_common_factor(*active[i], *active[j])) return true;

    // Pairwise coprime: project the union of the three pairwise (finite)
    // intersections injectively. A common zero lies in all three, so it
    // appears as a shared image of the three resultants; conversely, a
    // shared image pulls back to one point common to all three pairs.
    std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs = {
        {active[0], active[1]}, {active[0], active[2]}, {active[1], active[2]}};
    auto cert = certify_separation(active, pairs);

    std::vector<UniPoly> rhos;
    bool all_drop = true;
    for (const auto& [f, g] : pairs) {
        UniPoly rho = projected_resultant(*f, *g, cert.alpha, cert.beta);
        if (rho.degree() == f->total_degree() * g->total_degree()) all_drop = false;
        rhos.push_back(rho);
    }
    UniPoly common = gcd(gcd(rhos[0], rhos[1]), rhos[2]);
    return common.degree() >= 1 || all_drop;
}

std::vector<ProjPoint> rational_common_zeros(const MultiPoly& g1, const MultiPoly& g2,
                                             const MultiPoly& g3) {
    for (const auto* g : {&g1, &g2, &g3}) {
        if (g->nvars() != 3)
            throw std::invalid_argument("rational_common_zeros: needs three variables");
        if (!g->is_zero() && !g->is_homogeneous())
            throw std::invalid_argument("rational_common_zeros: needs homogeneous inputs");
        if (g->is_constant() && !g->is_zero()) return {};  // never zero anywhere
    }
    std::vector<MultiPoly> active;
    for (const auto* g : {&g1, &g2, &g3})
        if (!g->is_zero()) active.push_back(*g);
    if (active.empty())
        throw std::invalid_argument("rational_common_zeros: all forms are zero");
    if (active.size() == 1)
        throw std::domain_error("rational_common_zeros: the solution set is a curve");

    std::set<ProjPoint> out;
    if (active.size() == 2) {
        if (have_common_factor(active[0], active[1]))
            throw std::domain_error("rational_common_zeros: the solution set contains a curve");
        for (const auto& p : rational_points_of_pair(active[0], active[1])) out.insert(p);
        return {out.begin(), out.end()};
    }

    // With a shared factor d of two forms, the solutions split into the
    // points of V(d) on the third curve plus the solutions of the reduced
    // triple; recurse on the strictly smaller reduced degrees.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            MultiPoly d = poly_gcd(active[i], active[j]);
            if (d.is_constant()) continue;
            const int k = 3 - i - j;
            for (const auto& p : rational_points_of_pair(form_squarefree_part(d), active[k]))
                out.insert(p);
            auto qi = active[i].divided_exact(d);
            auto qj = active[j].divided_exact(d);
            if (!qi || !qj) throw std::logic_error("shared-factor division was not exact");
            for (const auto& p : rational_common_zeros(*qi, *qj, active[k])) out.insert(p);
            return {out.begin(), out.end()};
        }
    }

    // Pairwise coprime: the solutions sit inside one finite pairwise
    // intersection; keep the members satisfying the remaining equation.
    for (const auto& p : rational_points_of_pair(active[0], active[1])) {
        if (active[2].evaluate(p.coords()) == 0) out.insert(p);
    }
    return {out.begin(), out.end()};
}

std::vector<ProjPoint> certified_rational_zero_set(const MultiPoly& g1, const MultiPoly& g2,
                                                   const MultiPoly& g3) {
    bool all_zero = true;
    for (const auto* g : {&g1, &g2, &g3}) {
        if (g->nvars() != 3)
            throw std::invalid_argument("certified_rational_zero_set: needs three variables");
        if (!g->is_zero() && !g->is_homogeneous())
            throw std::invalid_argument("certified_rational_zero_set: needs homogeneous inputs");
        if (!g->is_zero()) all_zero = false;
    }
    if (all_zero)
        throw std::invalid_argument("certified_rational_zero_set: all forms are zero");

    std::set<ProjPoint> out;
    collect_certified({g1, g2, g3}, out);
    return {out.begin(), out.end()};
}

}  // namespace kulsurf
