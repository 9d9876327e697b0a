#include "kulsurf/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kulsurf {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // Same total degree: smaller means later in lex with X1 ranked highest.
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exps(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly p(nvars);
    Exps e(nvars, 0);
    e.at(var) = 1;
    p.terms_.emplace(e, Rat(1));
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exps& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exps(nvars_, 0);
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Grlex maximum has the maximal total degree.
    const Exps& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
    }
    return true;
}

Rat MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Exps& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly r(nvars_);
    Exps e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p.scaled(c); }

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    // Power cache per variable, filled on demand.
    std::vector<std::vector<Rat>> powers(nvars_, std::vector<Rat>{Rat(1)});
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            auto& cache = powers[i];
            while (cache.size() <= e[i]) cache.push_back(cache.back() * point[i]);
            if (e[i]) t *= cache[e[i]];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("image arity mismatch");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) {
        if (im.nvars() != target_vars) throw std::invalid_argument("variable-count mismatch among images");
    }
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(MultiPoly::constant(target_vars, Rat(1)));
    MultiPoly r(target_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            auto& cache = powers[i];
            while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
            if (e[i]) t *= cache[e[i]];
        }
        r += t;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
    int d = degree_in(var);
    if (d < 0) return {};
    std::vector<MultiPoly> cs(static_cast<std::size_t>(d) + 1, MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exps rest = e;
        unsigned k = rest.at(var);
        rest[var] = 0;
        cs[k].add_term(rest, c);
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(int nvars, int var, const std::vector<MultiPoly>& cs) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            Exps full = e;
            full.at(var) += static_cast<unsigned>(k);
            r.add_term(full, c);
        }
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_exact(const MultiPoly& d) const {
    if (nvars_ != d.nvars_) throw std::invalid_argument("variable-count mismatch");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(nvars_);
    const auto& dlead = *d.terms_.rbegin();
    // Exact division never needs more steps than the dividend has terms per
    // quotient term; cap guards against cycles from representation bugs.
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exps qe(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            if (rlead.first[i] < dlead.first[i]) return std::nullopt;
            qe[i] = rlead.first[i] - dlead.first[i];
        }
        Rat qc = rlead.second / dlead.second;
        MultiPoly qt = MultiPoly::monomial(nvars_, qe, qc);
        quot += qt;
        rem -= qt * d;
    }
    return quot;
}

MultiPoly MultiPoly::primitive_scaled() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& [e, c] : terms_) den = int_lcm(den, c.get_den());
    Int num(0);
    for (const auto& [e, c] : terms_) num = int_gcd(num, c.get_num() * (den / c.get_den()));
    Rat scale = make_rat(den, num);
    if (leading_coeff() < 0) scale = -scale;
    return scaled(scale);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int i) {
        if (i < static_cast<int>(names.size())) return names[i];
        return "X" + std::to_string(i + 1);
    };
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string coef;
        if (mag != 1 || mono.empty()) {
            coef = mag.get_num().get_str();
            if (mag.get_den() != 1) coef += "/" + mag.get_den().get_str();
        }
        if (!coef.empty() && !mono.empty()) out << coef << "*" << mono;
        else if (!coef.empty()) out << coef;
        else out << mono;
    }
    return out.str();
}

MultiPoly jacobian_det3(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& f3) {
    if (f1.nvars() != 3 || f2.nvars() != 3 || f3.nvars() != 3)
        throw std::invalid_argument("jacobian_det3 needs three trivariate polynomials");
    MultiPoly m[3][3];
    const MultiPoly* fs[3] = {&f1, &f2, &f3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = fs[i]->derivative(j);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

HomogeneousForm::HomogeneousForm(const MultiPoly& p) : poly(p) {
    if (p.is_zero()) throw std::invalid_argument("homogeneous form must be nonzero");
    if (!p.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
    degree = p.total_degree();
}

}  // namespace kulsurf
