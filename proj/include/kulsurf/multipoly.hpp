#pragma once

#include <map>
#include <string>
#include <vector>

#include "kulsurf/rational.hpp"

namespace kulsurf {

/// Exponent vector; size equals the variable count of the owning polynomial.
using Exps = std::vector<unsigned>;

/// Graded lexicographic order with X1 > X2 > X3 > ...: higher total degree wins,
/// ties broken by the earlier variable's exponent.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

/// Sparse multivariate polynomial over Q in canonical form: the term map never
/// holds zero coefficients, so structural equality is polynomial equality.
class MultiPoly {
   public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, const Exps& e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 when zero). Throws on nonconstants.
    Rat constant_value() const;

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;

    const std::map<Exps, Rat, GrlexLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Grlex-leading coefficient; zero polynomial yields 0.
    Rat leading_coeff() const;

    void add_term(const Exps& e, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rat& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rat evaluate(const std::vector<Rat>& point) const;
    MultiPoly derivative(int var) const;

    /// Simultaneous substitution X_i := images[i]; all images must share a
    /// variable count, which becomes the result's.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Coefficients of var^0, var^1, ... as polynomials of the same variable
    /// count with zero degree in var. Empty for the zero polynomial.
    std::vector<MultiPoly> coeffs_in(int var) const;
    static MultiPoly from_coeffs_in(int nvars, int var, const std::vector<MultiPoly>& cs);

    /// Exact quotient *this / d, or nullopt when d does not divide exactly.
    std::optional<MultiPoly> divided_exact(const MultiPoly& d) const;

    /// Scalar multiple with integer coprime coefficients and positive
    /// grlex-leading coefficient; canonical representative up to scale.
    MultiPoly primitive_scaled() const;

    /// Canonical text, grlex-descending, variables named names[i] (defaults X1, X2, ...).
    std::string to_string(const std::vector<std::string>& names = {}) const;

   private:
    int nvars_ = 0;
    std::map<Exps, Rat, GrlexLess> terms_;
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

/// Determinant of the matrix of partial derivatives of three polynomials in
/// three variables (rows: polynomials, columns: variables).
MultiPoly jacobian_det3(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& f3);

/// Nonzero polynomial all of whose terms share one total degree.
struct HomogeneousForm {
    MultiPoly poly;
    int degree = 0;

    HomogeneousForm() = default;
    /// Throws std::invalid_argument unless p is nonzero and homogeneous.
    explicit HomogeneousForm(const MultiPoly& p);

    bool operator==(const HomogeneousForm& o) const { return poly == o.poly; }
};

}  // namespace kulsurf
