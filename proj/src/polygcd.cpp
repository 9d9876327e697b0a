#include "kulsurf/polygcd.hpp"

#include <stdexcept>

namespace kulsurf {

namespace {

int pick_main_var(const MultiPoly& a, const MultiPoly& b) {
    for (int v = 0; v < a.nvars(); ++v) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    }
    return -1;
}

// Gcd of the coefficients of p viewed as univariate in var; the result has
// degree 0 in var.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c(p.nvars());
    for (const auto& coeff : p.coeffs_in(var)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder viewing var as the main variable: multiplies the running
// remainder by lc(v) before each cancellation, so divisions stay in Q[...].
MultiPoly prem_in(MultiPoly u, const MultiPoly& v, int var) {
    const auto vc = v.coeffs_in(var);
    const MultiPoly& vl = vc.back();
    const int dv = v.degree_in(var);
    while (!u.is_zero() && u.degree_in(var) >= dv) {
        auto uc = u.coeffs_in(var);
        const MultiPoly ul = uc.back();
        const int k = u.degree_in(var) - dv;
        MultiPoly shift = MultiPoly::monomial(u.nvars(), [&] {
            Exps e(u.nvars(), 0);
            e[var] = static_cast<unsigned>(k);
            return e;
        }(), Rat(1));
        u = u * vl - v * shift * ul;
    }
    return u;
}

MultiPoly primitive_in(const MultiPoly& p, int var) {
    if (p.is_zero()) return p;
    MultiPoly c = content_in(p, var);
    auto q = p.divided_exact(c);
    if (!q) throw std::logic_error("content division was not exact");
    return *q;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (a.is_zero()) return b.primitive_scaled();
    if (b.is_zero()) return a.primitive_scaled();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.nvars(), Rat(1));

    const int x = pick_main_var(a, b);
    if (a.degree_in(x) == 0) return poly_gcd(a, content_in(b, x));
    if (b.degree_in(x) == 0) return poly_gcd(content_in(a, x), b);

    const MultiPoly ca = content_in(a, x);
    const MultiPoly cb = content_in(b, x);
    const MultiPoly cg = poly_gcd(ca, cb);
    MultiPoly u = *a.divided_exact(ca);
    MultiPoly v = *b.divided_exact(cb);
    if (u.degree_in(x) < v.degree_in(x)) std::swap(u, v);

    while (true) {
        MultiPoly r = prem_in(u, v, x);
        if (r.is_zero()) break;
        if (r.degree_in(x) == 0) {
            // Primitive parts are coprime in x.
            v = MultiPoly::constant(a.nvars(), Rat(1));
            break;
        }
        r = primitive_in(r, x);
        u = std::move(v);
        v = std::move(r);
    }
    return (cg * v).primitive_scaled();
}

bool have_common_factor(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("common-factor test on zero polynomial");
    return !poly_gcd(a, b).is_constant();
}

bool is_squarefree(const MultiPoly& f) {
    if (f.is_zero()) return false;
    MultiPoly g = f;
    for (int v = 0; v < f.nvars(); ++v) {
        if (f.degree_in(v) <= 0) continue;
        g = poly_gcd(g, f.derivative(v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

}  // namespace kulsurf
