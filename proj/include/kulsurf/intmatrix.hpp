#pragma once

#include <array>

#include "kulsurf/rational.hpp"

namespace kulsurf {

/// 2x2 integer matrix, row-major.
struct IntMatrix2 {
    std::array<Int, 4> a{Int(0), Int(0), Int(0), Int(0)};

    IntMatrix2() = default;
    IntMatrix2(Int a00, Int a01, Int a10, Int a11)
        : a{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

    static IntMatrix2 identity() { return {Int(1), Int(0), Int(0), Int(1)}; }

    Int& at(int r, int c) { return a[static_cast<std::size_t>(2 * r + c)]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }

    Int det() const { return a[0] * a[3] - a[1] * a[2]; }
    IntMatrix2 operator*(const IntMatrix2& o) const;
    bool operator==(const IntMatrix2& o) const { return a == o.a; }
};

struct SmithDecomposition {
    IntMatrix2 u;  // unimodular
    IntMatrix2 d;  // diagonal, nonnegative, d00 | d11
    IntMatrix2 v;  // unimodular
};

/// U * m * V = D with U, V unimodular (|det| = 1) and D in Smith form:
/// diagonal, nonnegative entries, first divides second.
SmithDecomposition smith_normal_form(const IntMatrix2& m);

}  // namespace kulsurf
