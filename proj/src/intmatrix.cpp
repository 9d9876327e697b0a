#include "kulsurf/intmatrix.hpp"

#include <stdexcept>

namespace kulsurf {

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
    return {a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
            a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]};
}

namespace {

// Left-multiplies m by the unimodular matrix sending rows (r0, r1) to
// (x*r0 + y*r1, -(b/g)*r0 + (a/g)*r1), where g = x*a + y*b = gcd(a, b) for the
// targeted column entries a, b. Mirrors the update into u.
void row_gcd_step(IntMatrix2& m, IntMatrix2& u, int col) {
    Int a = m.at(0, col), b = m.at(1, col);
    if (b == 0) return;
    if (a == 0) {
        std::swap(m.a[0], m.a[2]);
        std::swap(m.a[1], m.a[3]);
        std::swap(u.a[0], u.a[2]);
        std::swap(u.a[1], u.a[3]);
        return;
    }
    if (b % a == 0) {
        // Shear keeps the pivot fixed; needed so alternating row/column
        // passes cannot oscillate once the pivot equals the gcd.
        IntMatrix2 t{Int(1), Int(0), -(b / a), Int(1)};
        m = t * m;
        u = t * u;
        return;
    }
    Int x, y;
    Int g = int_gcdext(a, b, x, y);
    Int p = -(b / g), q = a / g;  // det of [[x, y], [p, q]] is +1
    IntMatrix2 t{x, y, p, q};
    m = t * m;
    u = t * u;
}

void col_gcd_step(IntMatrix2& m, IntMatrix2& v, int row) {
    Int a = m.at(row, 0), b = m.at(row, 1);
    if (b == 0) return;
    if (a == 0) {
        std::swap(m.a[0], m.a[1]);
        std::swap(m.a[2], m.a[3]);
        std::swap(v.a[0], v.a[1]);
        std::swap(v.a[2], v.a[3]);
        return;
    }
    if (b % a == 0) {
        IntMatrix2 t{Int(1), -(b / a), Int(0), Int(1)};
        m = m * t;
        v = v * t;
        return;
    }
    Int x, y;
    Int g = int_gcdext(a, b, x, y);
    Int p = -(b / g), q = a / g;
    IntMatrix2 t{x, p, y, q};  // right factor: columns combined
    m = m * t;
    v = v * t;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix2& m) {
    SmithDecomposition s{IntMatrix2::identity(), m, IntMatrix2::identity()};
    IntMatrix2& d = s.d;

    // Clearing a row can disturb the column and vice versa; alternate until
    // both off-diagonal entries vanish, then restart once more if the
    // divisibility d00 | d11 still fails after folding d11 into column one.
    // Pivot magnitudes never grow and shrink at every restart, so this
    // terminates; the cap only guards against an update bug.
    bool done = false;
    for (int pass = 0; pass < 256 && !done; ++pass) {
        row_gcd_step(d, s.u, 0);
        col_gcd_step(d, s.v, 0);
        if (d.at(1, 0) != 0 || d.at(0, 1) != 0) continue;
        if (d.at(0, 0) != 0 && d.at(1, 1) % d.at(0, 0) != 0) {
            IntMatrix2 t{Int(1), Int(0), Int(1), Int(1)};  // add column 2 to column 1
            d = d * t;
            s.v = s.v * t;
            continue;
        }
        done = true;
    }
    if (!done) throw std::logic_error("Smith reduction did not converge");

    for (int i = 0; i < 2; ++i) {
        if (d.at(i, i) < 0) {
            // Negate row i; stays unimodular.
            d.a[static_cast<std::size_t>(2 * i)] = -d.a[static_cast<std::size_t>(2 * i)];
            d.a[static_cast<std::size_t>(2 * i + 1)] = -d.a[static_cast<std::size_t>(2 * i + 1)];
            s.u.a[static_cast<std::size_t>(2 * i)] = -s.u.a[static_cast<std::size_t>(2 * i)];
            s.u.a[static_cast<std::size_t>(2 * i + 1)] = -s.u.a[static_cast<std::size_t>(2 * i + 1)];
        }
    }
    if (d.at(0, 0) == 0 && d.at(1, 1) != 0) {
        // Zero invariant factor must come last.
        IntMatrix2 swap_rows{Int(0), Int(1), Int(1), Int(0)};
        d = swap_rows * d * swap_rows;
        s.u = swap_rows * s.u;
        s.v = s.v * swap_rows;
    }
    return s;
}

}  // namespace kulsurf
