#include "kulsurf/resultant.hpp"

#include <stdexcept>

namespace kulsurf {

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    const int nv = m[0][0].nvars();
    if (n == 1) return m[0][0];

    MultiPoly prev = MultiPoly::constant(nv, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(nv);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divided_exact(prev);
                if (!q) throw std::logic_error("Bareiss division was not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(nv);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    const int nv = f.nvars();
    const int df = std::max(f.degree_in(var), 0);
    const int dg = std::max(g.degree_in(var), 0);
    if (f.is_zero() || g.is_zero()) return MultiPoly(nv);
    if (df == 0 && dg == 0) return MultiPoly::constant(nv, Rat(1));
    if (df == 0) return f.pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.pow(static_cast<unsigned>(df));

    const auto fc = f.coeffs_in(var);
    const auto gc = g.coeffs_in(var);
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    // dg rows of f's coefficients, then df rows of g's, descending by degree.
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[r][r + k] = fc[static_cast<std::size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m[dg + r][r + k] = gc[static_cast<std::size_t>(dg - k)];
    return bareiss_determinant(std::move(m));
}

}  // namespace kulsurf
