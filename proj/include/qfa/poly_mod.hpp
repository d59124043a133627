#pragma once

// Univariate polynomial factorization over F_p for small p (p <= 2^16).
// Squarefree decomposition (with p-th root step), distinct-degree, and
// Cantor-Zassenhaus equal-degree splitting. Splitting elements come from a
// deterministic PRNG so factor order is reproducible; results are sorted
// canonically anyway.

#include <cstdint>
#include <map>
#include <vector>

#include "qfa/numeric.hpp"
#include "qfa/poly.hpp"

namespace qfa {

// Dense poly over F_p, low degree first, coefficients in [0, p).
struct ModPoly {
    std::uint32_t p = 0;
    std::vector<std::uint64_t> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t lc() const { return c.empty() ? 0 : c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
    bool operator<(const ModPoly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

namespace detail {

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError("mod_inv: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace detail

inline ModPoly mp_make(std::uint32_t p, std::vector<std::uint64_t> c) {
    ModPoly f{p, std::move(c)};
    for (auto& x : f.c) x %= p;
    f.trim();
    return f;
}

inline ModPoly mp_from_int_poly(const IntPoly& f, std::uint32_t p) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    Int pp(static_cast<long>(p));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fmod(f[i], pp).get_ui();
    return mp_make(p, std::move(c));
}

inline IntPoly mp_to_int_poly(const ModPoly& f) {
    std::vector<Int> c(f.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Int(static_cast<unsigned long>(f.c[i]));
    return IntPoly(std::move(c));
}

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
    r.trim();
    return r;
}

inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    r.trim();
    return r;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly{a.p, {}};
    std::vector<std::uint64_t> r(a.c.size() + b.c.size() - 1, 0);
    std::uint64_t p = a.p;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % p;
    }
    ModPoly out{a.p, std::move(r)};
    out.trim();
    return out;
}

inline ModPoly mp_scale(const ModPoly& a, std::uint64_t k) {
    ModPoly r = a;
    k %= a.p;
    for (auto& x : r.c) x = x * k % a.p;
    r.trim();
    return r;
}

inline ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    return mp_scale(a, detail::mod_inv(a.lc(), a.p));
}

inline void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw DomainError("mod poly division by zero");
    q = ModPoly{a.p, {}};
    r = a;
    std::uint64_t inv = detail::mod_inv(b.lc(), a.p);
    if (a.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        std::uint64_t coef = r.lc() * inv % a.p;
        q.c[static_cast<std::size_t>(k)] = coef;
        for (int j = 0; j <= b.degree(); ++j) {
            auto idx = static_cast<std::size_t>(k + j);
            r.c[idx] = (r.c[idx] + a.p - coef * b.c[static_cast<std::size_t>(j)] % a.p) % a.p;
        }
        r.trim();
    }
    q.trim();
}

inline ModPoly mp_rem(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    return r;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

inline ModPoly mp_derivative(const ModPoly& a) {
    if (a.c.size() <= 1) return ModPoly{a.p, {}};
    ModPoly r{a.p, std::vector<std::uint64_t>(a.c.size() - 1, 0)};
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * (i % a.p) % a.p;
    r.trim();
    return r;
}

// b^e mod f
inline ModPoly mp_powmod(ModPoly b, Int e, const ModPoly& f) {
    ModPoly r{f.p, {1}};
    b = mp_rem(b, f);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_rem(mp_mul(r, b), f);
        b = mp_rem(mp_mul(b, b), f);
        e >>= 1;
    }
    return r;
}

// p-th root of f when f = g(x^p); in F_p, coefficientwise identity.
inline ModPoly mp_pth_root(const ModPoly& f) {
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < f.c.size(); i += f.p) c.push_back(f.c[i]);
    return mp_make(f.p, std::move(c));
}

// Squarefree decomposition in characteristic p: returns pairs (g_i, e_i),
// g_i monic squarefree pairwise coprime, f/lc = prod g_i^{e_i}.
inline std::vector<std::pair<ModPoly, int>> mp_squarefree_decomposition(const ModPoly& f_in) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = mp_monic(f_in);
    if (f.degree() <= 0) return out;

    // Yun-style pass; the p-th power part is handled recursively.
    auto rec = [&](auto&& self, ModPoly g, int mult) -> void {
        if (g.degree() <= 0) return;
        ModPoly gp = mp_derivative(g);
        if (gp.is_zero()) {
            // g = h(x^p)
            ModPoly h = mp_pth_root(g);
            self(self, h, mult * static_cast<int>(g.p));
            return;
        }
        ModPoly c = mp_gcd(g, gp);
        ModPoly w;
        {
            ModPoly q, r;
            mp_divrem(g, c, q, r);
            w = q;  // squarefree part times stuff
        }
        int i = 1;
        while (w.degree() > 0) {
            ModPoly y = mp_gcd(w, c);
            ModPoly fac;
            {
                ModPoly q, r;
                mp_divrem(w, y, q, r);
                fac = q;
            }
            if (fac.degree() > 0) out.emplace_back(mp_monic(fac), i * mult);
            w = y;
            ModPoly q, r;
            mp_divrem(c, y, q, r);
            c = q;
            ++i;
        }
        if (c.degree() > 0) {
            // remaining p-th power part
            ModPoly h = mp_pth_root(c);
            self(self, h, mult * static_cast<int>(g.p));
        }
    };
    rec(rec, f, 1);
    return out;
}

// Distinct-degree factorization of a monic squarefree f: list of
// (product-of-degree-d-factors, d).
inline std::vector<std::pair<ModPoly, int>> mp_distinct_degree(const ModPoly& f_in) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = mp_monic(f_in);
    ModPoly x{f.p, {0, 1}};
    ModPoly h = x;  // x^(p^d) mod f, iterated
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = mp_powmod(h, Int(static_cast<long>(f.p)), f);
        ModPoly g = mp_gcd(mp_sub(h, x), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            ModPoly q, r;
            mp_divrem(f, g, q, r);
            f = q;
            h = mp_rem(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of monic squarefree f whose
// irreducible factors all have degree d.
inline void mp_equal_degree(const ModPoly& f, int d, DetRng& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(mp_monic(f));
        return;
    }
    int n = f.degree();
    while (true) {
        // random poly of degree < n
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(n), 0);
        for (auto& x : rc) x = rng.next_below(f.p);
        ModPoly r = mp_make(f.p, std::move(rc));
        if (r.degree() < 1) continue;
        ModPoly g = mp_gcd(r, f);
        if (g.degree() == 0) {
            if (f.p == 2) {
                // trace map T(r) = r + r^2 + ... + r^(2^(d-1)) mod f
                ModPoly t = r, acc = r;
                for (int i = 1; i < d; ++i) {
                    t = mp_rem(mp_mul(t, t), f);
                    acc = mp_add(acc, t);
                }
                g = mp_gcd(acc, f);
            } else {
                Int e = (pow_int(Int(static_cast<long>(f.p)), static_cast<unsigned long>(d)) - 1) / 2;
                ModPoly t = mp_powmod(r, e, f);
                g = mp_gcd(mp_sub(t, ModPoly{f.p, {1}}), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            ModPoly q, rem;
            mp_divrem(f, g, q, rem);
            mp_equal_degree(g, d, rng, out);
            mp_equal_degree(q, d, rng, out);
            return;
        }
    }
}

// Full factorization over F_p: monic irreducible factors with multiplicity,
// sorted. Product times lc(f) reproduces f.
inline std::vector<std::pair<ModPoly, int>> factor_mod_p(const IntPoly& f, std::uint32_t p) {
    if (p < 2 || p > (1u << 16)) throw DomainError("factor_mod_p: prime out of range");
    ModPoly fp = mp_from_int_poly(f, p);
    if (fp.degree() != f.degree()) throw DomainError("factor_mod_p: p divides leading coefficient");
    std::map<ModPoly, int> acc;
    DetRng rng(0x51ab5eedULL ^ (static_cast<std::uint64_t>(p) << 32) ^ fp.c.size());
    for (const auto& [g, e] : mp_squarefree_decomposition(fp)) {
        for (const auto& [h, d] : mp_distinct_degree(g)) {
            std::vector<ModPoly> irr;
            mp_equal_degree(h, d, rng, irr);
            for (auto& q : irr) acc[q] += e;
        }
    }
    return {acc.begin(), acc.end()};
}

// Factor-degree pattern of f mod p for p not dividing lc(f)*disc(f); in that
// case f mod p is squarefree and distinct-degree factorization suffices.
inline std::vector<int> mp_degree_pattern(const IntPoly& f, std::uint32_t p) {
    ModPoly fp = mp_from_int_poly(f, p);
    if (fp.degree() != f.degree()) throw DomainError("degree_pattern: p divides leading coefficient");
    std::vector<int> pattern;
    for (const auto& [g, d] : mp_distinct_degree(fp)) {
        int count = g.degree() / d;
        for (int i = 0; i < count; ++i) pattern.push_back(d);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

inline bool mp_is_squarefree(const IntPoly& f, std::uint32_t p) {
    ModPoly fp = mp_from_int_poly(f, p);
    if (fp.degree() != f.degree()) return false;
    return mp_gcd(fp, mp_derivative(fp)).degree() == 0;
}

}  // namespace qfa
