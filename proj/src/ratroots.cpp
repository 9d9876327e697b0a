#include "kulsurf/ratroots.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace kulsurf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Dense poly over F_p, ascending coefficients, no trailing zeros.
using PolyP = std::vector<u64>;

void trimp(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
    }
    trimp(r);
    return r;
}

PolyP mod(PolyP a, const PolyP& m, u64 p) {
    u64 inv = powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        u64 c = mulmod(a.back(), inv, p);
        std::size_t k = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            u64 sub = mulmod(c, m[i], p);
            a[k + i] = (a[k + i] + p - sub) % p;
        }
        trimp(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP gcdp(PolyP a, PolyP b, u64 p) {
    trimp(a);
    trimp(b);
    while (!b.empty()) {
        PolyP r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

PolyP derivp(const PolyP& f, u64 p) {
    if (f.size() <= 1) return {};
    PolyP r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % p, p);
    trimp(r);
    return r;
}

// base^e mod (m, p) by repeated squaring in F_p[x]/(m).
PolyP powmod_poly(PolyP base, Int e, const PolyP& m, u64 p) {
    PolyP r{1};
    base = mod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// Roots in F_p of a monic squarefree f that splits into distinct linear
// factors (callers pass gcd(x^p - x, f)). Deterministic splitting sequence.
void split_roots(const PolyP& f, u64 p, std::vector<u64>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        // x + c = 0  =>  root p - c
        out.push_back(f[0] ? p - mulmod(f[0], powmod(f[1], p - 2, p), p) : 0);
        return;
    }
    for (u64 shift = 1; shift < 64; ++shift) {
        // gcd with (x + a)^((p-1)/2) - 1 splits off the roots r with
        // (r + a) a quadratic residue; a fixed scan of a-values suffices.
        PolyP base{shift, 1};
        PolyP h = powmod_poly(base, Int((p - 1) / 2), f, p);
        if (h.empty()) h = {p - 1};
        else h[0] = (h[0] + p - 1) % p;
        trimp(h);
        if (h.empty()) continue;  // every shifted root is a residue: no split here
        PolyP g = gcdp(f, h, p);
        if (g.size() > 1 && g.size() < f.size()) {
            PolyP rest = f;
            // rest = f / g exactly in F_p[x]
            PolyP q;
            {
                PolyP num = f;
                q.assign(num.size() - g.size() + 1, 0);
                u64 inv = powmod(g.back(), p - 2, p);
                while (num.size() >= g.size()) {
                    u64 c = mulmod(num.back(), inv, p);
                    std::size_t k = num.size() - g.size();
                    q[k] = c;
                    for (std::size_t i = 0; i < g.size(); ++i) {
                        u64 sub = mulmod(c, g[i], p);
                        num[k + i] = (num[k + i] + p - sub) % p;
                    }
                    trimp(num);
                    if (num.empty()) break;
                }
                trimp(q);
            }
            split_roots(g, p, out);
            split_roots(q, p, out);
            return;
        }
    }
    throw std::runtime_error("root splitting mod p did not converge");
}

std::vector<u64> roots_mod_p(const std::vector<Int>& f, u64 p) {
    PolyP fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int r = f[i] % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        fp[i] = r.get_ui();
    }
    trimp(fp);
    PolyP xp = powmod_poly(PolyP{0, 1}, Int(static_cast<unsigned long>(p)), fp, p);
    // x^p - x mod f
    PolyP diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trimp(diff);
    PolyP g = gcdp(fp, diff, p);
    std::vector<u64> roots;
    split_roots(g, p, roots);
    return roots;
}

bool squarefree_mod_p(const std::vector<Int>& f, u64 p) {
    PolyP fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int r = f[i] % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        fp[i] = r.get_ui();
    }
    if (fp.empty() || fp.back() == 0) return false;  // leading coefficient dropped
    PolyP g = gcdp(fp, derivp(fp, p), p);
    return g.size() == 1;
}

Int eval_int(const std::vector<Int>& f, const Int& x, const Int& mod) {
    Int acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % mod;
    if (acc < 0) acc += mod;
    return acc;
}

// Wang-style rational reconstruction of r mod M with |num| <= bound, 0 < den <= bound.
bool rational_reconstruct(const Int& r, const Int& M, const Int& bound, Rat& out) {
    Int r0 = M, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    Int den = t1 < 0 ? Int(-t1) : t1;
    Int num = t1 < 0 ? Int(-r1) : r1;
    if (den > bound) return false;
    out = make_rat(num, den);
    return true;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<Rat> found;
    if (p.degree() < 1) return found;
    UniPoly sf = squarefree_part(p);
    std::vector<Int> f = sf.int_primitive();

    if (f[0] == 0) {
        found.push_back(Rat(0));
        f.erase(f.begin());  // squarefree, so x divides at most once
    }
    if (f.size() <= 1) return found;

    // Any rational root n/d in lowest terms has n | f[0] and d | lc(f).
    Int bound = f[0] < 0 ? Int(-f[0]) : f[0];
    Int alc = f.back() < 0 ? Int(-f.back()) : f.back();
    if (alc > bound) bound = alc;

    // Prime with good reduction: squarefree part stays squarefree and the
    // leading coefficient survives. Only divisors of lc*disc are excluded.
    Int pz;
    mpz_nextprime(pz.get_mpz_t(), Int(1099511627776).get_mpz_t());  // first prime past 2^40
    int attempts = 0;
    while (!squarefree_mod_p(f, pz.get_ui())) {
        if (++attempts > 200) throw std::runtime_error("no prime of good reduction found");
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    }
    u64 p64 = pz.get_ui();

    std::vector<u64> residues = roots_mod_p(f, p64);
    if (residues.empty()) {
        std::sort(found.begin(), found.end());
        return found;
    }

    // Lift each simple root with Newton steps until the modulus passes 2*bound^2.
    Int target = 2 * bound * bound + 1;
    std::vector<Int> df(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * Int(static_cast<unsigned long>(i));

    for (u64 r0 : residues) {
        Int modulus(static_cast<unsigned long>(p64));
        Int r(static_cast<unsigned long>(r0));
        while (modulus < target) {
            modulus = modulus * modulus;
            Int fr = eval_int(f, r, modulus);
            Int dfr = eval_int(df, r, modulus);
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), modulus.get_mpz_t()) == 0)
                break;  // derivative not invertible: this residue cannot lift to a simple root
            r = (r - fr * inv) % modulus;
            if (r < 0) r += modulus;
        }
        Rat candidate;
        if (!rational_reconstruct(r, modulus, bound, candidate)) continue;
        if (sf.evaluate(candidate) == 0) found.push_back(candidate);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace kulsurf
