#include "kulsurf/unipoly.hpp"

#include <stdexcept>

namespace kulsurf {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_int_coeffs(const std::vector<Int>& cs) {
    std::vector<Rat> q(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) q[i] = Rat(cs[i]);
    return UniPoly(std::move(q));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, int var) {
    std::vector<Rat> cs(static_cast<std::size_t>(std::max(0, p.degree_in(var) + 1)));
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i) {
            if (i != var && e[i] != 0)
                throw std::invalid_argument("polynomial involves a second variable");
        }
        cs[e[var]] = c;
    }
    return UniPoly(std::move(cs));
}

MultiPoly UniPoly::to_multipoly(int nvars, int var) const {
    MultiPoly r(nvars);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Exps e(nvars, 0);
        e.at(var) = static_cast<unsigned>(i);
        r.add_term(e, coeffs_[i]);
    }
    return r;
}

int UniPoly::order_at_zero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::scaled(const Rat& c) const {
    if (c == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& k : r.coeffs_) k *= c;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return UniPoly();
    std::vector<Rat> cs(coeffs_.size() + static_cast<std::size_t>(k), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(Rat(1) / lc());
}

Rat UniPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        cs[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(cs));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Rat(0));
    Rat dl = d.lc();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat c = rem.lc() / dl;
        q[k] = c;
        rem = rem - d.shifted(k).scaled(c);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divided_exact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact univariate division");
    return q;
}

std::vector<Int> UniPoly::int_primitive() const {
    if (is_zero()) return {};
    Int den(1);
    for (const auto& c : coeffs_) den = int_lcm(den, c.get_den());
    std::vector<Int> cs(coeffs_.size());
    Int content(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cs[i] = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
        content = int_gcd(content, cs[i]);
    }
    if (cs.back() < 0) content = -content;
    for (auto& c : cs) c /= content;
    return cs;
}

namespace {

// In-place integer content removal; keeps the sign of the leading coefficient positive.
void make_primitive(std::vector<Int>& cs) {
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    if (cs.empty()) return;
    Int g(0);
    for (const auto& c : cs) g = int_gcd(g, c);
    if (cs.back() < 0) g = -g;
    for (auto& c : cs) c /= g;
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& bl = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        Int al = a.back();
        for (auto& c : a) c *= bl;
        int k = static_cast<int>(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(k + i)] -= al * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = a.int_primitive();
    std::vector<Int> v = b.int_primitive();
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        if (v.size() == 1) return UniPoly::constant(Rat(1));
        std::vector<Int> r = prem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return UniPoly::from_int_coeffs(u).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_constant()) return out;
    UniPoly f = p.monic();
    UniPoly g = gcd(f, f.derivative());
    UniPoly c = f.divided_exact(g);
    UniPoly d = f.derivative().divided_exact(g) - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = c.divided_exact(a);
        d = d.divided_exact(a) - c.derivative();
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    UniPoly r = UniPoly::constant(Rat(1));
    for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
    return r;
}

}  // namespace kulsurf
