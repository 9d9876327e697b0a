#pragma once

#include <utility>
#include <vector>

#include "kulsurf/multipoly.hpp"
#include "kulsurf/rational.hpp"

namespace kulsurf {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// Canonical: no trailing zero coefficient.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> cs) : coeffs_(std::move(cs)) { trim(); }
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    static UniPoly from_int_coeffs(const std::vector<Int>& cs);

    /// Reads a polynomial that involves at most the variable `var`.
    static UniPoly from_multipoly(const MultiPoly& p, int var);
    MultiPoly to_multipoly(int nvars, int var) const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat lc() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    /// Multiplicity of the root 0, i.e. the lowest nonzero coefficient index.
    int order_at_zero() const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& c) const;
    UniPoly shifted(int k) const;  // multiply by x^k
    UniPoly monic() const;

    Rat evaluate(const Rat& x) const;
    UniPoly derivative() const;

    /// Field division: returns (quotient, remainder) with deg rem < deg divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Exact quotient; throws std::logic_error if the remainder is nonzero.
    UniPoly divided_exact(const UniPoly& d) const;

    /// Integer-primitive representative: coefficients cleared to coprime
    /// integers, leading coefficient positive. Zero stays zero.
    std::vector<Int> int_primitive() const;

   private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic gcd computed by the primitive-part subresultant sequence over Z
/// (pseudo-remainders, content stripped every step). gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with the f_i monic,
/// squarefree, pairwise coprime and the m_i strictly increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Product of the distinct monic irreducible factors, i.e. prod f_i above.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace kulsurf
