#pragma once

// Factorization over Z (and hence irreducibility over Q) by the classical
// Zassenhaus route: factor mod a well-chosen small prime, Hensel-lift the
// factorization above the Landau-Mignotte bound, then recombine subsets by
// exact trial division. Degrees here never exceed ~20, so naive subset
// recombination is affordable.

#include <algorithm>
#include <numeric>
#include <vector>

#include "qfa/numeric.hpp"
#include "qfa/poly.hpp"
#include "qfa/poly_mod.hpp"

namespace qfa {
namespace henseldetail {

// Poly arithmetic with coefficients mod m (m = p^a), non-negative reps.
using MPoly = std::vector<Int>;

inline void m_trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline MPoly m_reduce(const IntPoly& f, const Int& m) {
    MPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fmod(f[i], m);
    m_trim(r);
    return r;
}

inline int m_deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

inline MPoly m_mul(const MPoly& a, const MPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = fmod(x, m);
    m_trim(r);
    return r;
}

inline MPoly m_add(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    for (auto& x : r) x = fmod(x, m);
    m_trim(r);
    return r;
}

inline MPoly m_sub(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& x : r) x = fmod(x, m);
    m_trim(r);
    return r;
}

// divrem by monic divisor
inline void m_divrem(const MPoly& a, const MPoly& b, const Int& m, MPoly& q, MPoly& r) {
    if (b.empty() || b.back() != 1) throw DomainError("hensel divrem needs monic divisor");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (m_deg(r) >= m_deg(b)) {
        int k = m_deg(r) - m_deg(b);
        Int coef = r.back();
        q[static_cast<std::size_t>(k)] = coef;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto idx = static_cast<std::size_t>(k) + j;
            r[idx] = fmod(r[idx] - coef * b[j], m);
        }
        m_trim(r);
    }
    m_trim(q);
}

// Symmetric representative in (-m/2, m/2].
inline IntPoly m_symmetric(const MPoly& f, const Int& m) {
    std::vector<Int> c(f.size());
    Int half = m / 2;
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = (f[i] > half) ? f[i] - m : f[i];
    return IntPoly(std::move(c));
}

// xgcd over F_p for ModPoly: s*a + t*b = 1 (a, b coprime mod p).
inline void mp_xgcd_coprime(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{a.p, {1}}, s1{a.p, {}};
    ModPoly t0{a.p, {}}, t1{a.p, {1}};
    while (!r1.is_zero()) {
        ModPoly q, r;
        mp_divrem(r0, r1, q, r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = s2;
        t0 = std::move(t1);
        t1 = t2;
    }
    if (r0.degree() != 0) throw DomainError("hensel: factors not coprime mod p");
    std::uint64_t inv = detail::mod_inv(r0.lc(), a.p);
    s = mp_scale(s0, inv);
    t = mp_scale(t0, inv);
}

inline MPoly m_from_modpoly(const ModPoly& f) {
    MPoly r(f.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = Int(static_cast<unsigned long>(f.c[i]));
    return r;
}

// One quadratic Hensel step m -> m^2 for monic f = g*h, s*g + t*h = 1.
inline void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Int& m) {
    Int m2 = m * m;
    MPoly e = m_sub(f, m_mul(g, h, m2), m2);
    MPoly q, r;
    m_divrem(m_mul(s, e, m2), h, m2, q, r);
    MPoly g1 = m_add(g, m_add(m_mul(t, e, m2), m_mul(q, g, m2), m2), m2);
    MPoly h1 = m_add(h, r, m2);
    MPoly b = m_sub(m_add(m_mul(s, g1, m2), m_mul(t, h1, m2), m2), MPoly{Int(1)}, m2);
    MPoly c, d;
    m_divrem(m_mul(s, b, m2), h1, m2, c, d);
    s = m_sub(s, d, m2);
    t = m_sub(t, m_add(m_mul(t, b, m2), m_mul(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
}

// Lift the complete factorization of monic f mod p to mod p^(2^j) >= target,
// by binary splitting. factors: monic mod p, pairwise coprime.
inline std::vector<MPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors,
                                      std::uint32_t p, const Int& target, Int& modulus_out) {
    Int m(static_cast<long>(p));
    while (m < target) m = m * m;
    modulus_out = m;

    // recursive split
    auto rec = [&](auto&& self, const MPoly& fcur, std::size_t lo, std::size_t hi,
                   std::vector<MPoly>& out) -> void {
        if (hi - lo == 1) {
            out.push_back(fcur);
            return;
        }
        std::size_t mid = lo + (hi - lo) / 2;
        ModPoly G{p, {1}}, H{p, {1}};
        for (std::size_t i = lo; i < mid; ++i) G = mp_mul(G, factors[i]);
        for (std::size_t i = mid; i < hi; ++i) H = mp_mul(H, factors[i]);
        ModPoly sp, tp;
        mp_xgcd_coprime(G, H, sp, tp);
        MPoly g = m_from_modpoly(G), h = m_from_modpoly(H);
        MPoly s = m_from_modpoly(sp), t = m_from_modpoly(tp);
        Int mk(static_cast<long>(p));
        while (mk < m) {
            hensel_step(fcur, g, h, s, t, mk);
            mk = mk * mk;
        }
        // g*h == fcur mod m by construction
        self(self, g, lo, mid, out);
        self(self, h, mid, hi, out);
    };

    std::vector<MPoly> lifted;
    rec(rec, m_reduce(f, m), 0, factors.size(), lifted);
    return lifted;
}

}  // namespace henseldetail

// Zassenhaus factorization of a primitive squarefree polynomial, deg >= 1.
inline std::vector<IntPoly> zassenhaus_squarefree(const IntPoly& f_in) {
    using namespace henseldetail;
    IntPoly f = f_in;
    if (f.degree() < 1) throw DomainError("zassenhaus: degree >= 1 required");
    if (f.degree() == 1) return {f};

    const Int lc = f.lc();
    const int n = f.degree();

    // Monicize: F(x) = lc^(n-1) f(x/lc).
    std::vector<Int> Fc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        Fc[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * pow_int(lc, static_cast<unsigned long>(n - 1 - i >= 0 ? n - 1 - i : 0));
    // careful: i == n gives lc^( -1 ); fix below
    Fc[static_cast<std::size_t>(n)] = 1;
    IntPoly F(std::move(Fc));

    // Choose the prime with the fewest modular factors among a few
    // squarefree reductions.
    static const std::uint32_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                            37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::uint32_t best_p = 0;
    std::vector<std::pair<ModPoly, int>> best_factors;
    int tried = 0;
    for (std::uint32_t p : kPrimes) {
        if (!mp_is_squarefree(F, p)) continue;
        auto fac = factor_mod_p(F, p);
        ++tried;
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = fac;
        }
        if (best_factors.size() == 1 || tried >= 4) break;
    }
    if (best_p == 0) throw DomainError("zassenhaus: no squarefree reduction among small primes");
    if (best_factors.size() == 1) return {f};

    // Landau-Mignotte style bound for coefficients of monic divisors of F,
    // doubled for the symmetric range.
    Int norm2_sq(0);
    for (const auto& a : F.coeffs()) norm2_sq += a * a;
    Int bound = (isqrt(norm2_sq) + 1) * pow_int(Int(2), static_cast<unsigned long>(n + 2));

    std::vector<ModPoly> mods;
    mods.reserve(best_factors.size());
    for (auto& [g, e] : best_factors) mods.push_back(g);  // e == 1: squarefree
    Int modulus;
    auto lifted = hensel_lift(F, mods, best_p, 2 * bound + 1, modulus);

    // Subset recombination against the original (non-monicized) polynomial.
    std::vector<IntPoly> result;
    IntPoly fcur = f;
    std::vector<MPoly> pool = lifted;

    auto candidate_from_subset = [&](const std::vector<std::size_t>& idx) -> IntPoly {
        MPoly prod{Int(1)};
        for (auto i : idx) prod = m_mul(prod, pool[i], modulus);
        IntPoly G = m_symmetric(prod, modulus);
        // map back through x -> lc*x and take the primitive part
        if (lc == 1) return G.primitive_part();
        std::vector<Int> c(G.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = G[i] * pow_int(lc, static_cast<unsigned long>(i));
        return IntPoly(std::move(c)).primitive_part();
    };

    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) -> bool {
        std::size_t k = idx.size();
        for (std::size_t i = k; i-- > 0;) {
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    bool found = true;
    while (found && pool.size() > 1) {
        found = false;
        for (std::size_t card = 1; card <= pool.size() / 2 && !found; ++card) {
            std::vector<std::size_t> idx(card);
            std::iota(idx.begin(), idx.end(), 0);
            do {
                IntPoly cand = candidate_from_subset(idx);
                IntPoly quot;
                if (cand.degree() >= 1 && try_divide(fcur, cand, quot)) {
                    result.push_back(cand);
                    fcur = quot;
                    std::vector<MPoly> rest;
                    std::size_t k = 0;
                    for (std::size_t i = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i)
                            ++k;
                        else
                            rest.push_back(pool[i]);
                    }
                    pool = std::move(rest);
                    found = true;
                    break;
                }
            } while (next_combination(idx, pool.size()));
        }
    }
    if (fcur.degree() >= 1) result.push_back(fcur.primitive_part());
    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
        return false;
    });
    return result;
}

// Yun squarefree decomposition over Z of a primitive polynomial: pairs
// (g_i, i) with f = sign * prod g_i^i.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition_z(const IntPoly& f_in) {
    IntPoly f = f_in.primitive_part();
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    IntPoly df = f.derivative();
    IntPoly a = poly_gcd(f, df);
    if (a.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b, c;
    try_divide(f, a, b);
    try_divide(df, a, c);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        IntPoly b2, c2;
        try_divide(b, g, b2);
        try_divide(d, g, c2);
        b = b2;
        d = c2 - b.derivative();
        ++i;
    }
    return out;
}

// Irreducible factors with multiplicity of any nonzero integer polynomial
// (content dropped).
inline std::vector<std::pair<IntPoly, int>> factor_over_z(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("factor of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [g, e] : squarefree_decomposition_z(f))
        for (const auto& irr : zassenhaus_squarefree(g)) out.emplace_back(irr, e);
    return out;
}

// True iff f is irreducible over Q. Requires deg f >= 1.
inline bool is_irreducible_over_q(const IntPoly& f_in) {
    IntPoly f = f_in.primitive_part();
    if (f.degree() < 1) throw DomainError("irreducibility needs degree >= 1");
    if (f.degree() == 1) return true;
    if (poly_gcd(f, f.derivative()).degree() > 0) return false;
    // quick win: one irreducible modular image certifies irreducibility
    static const std::uint32_t kQuick[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (std::uint32_t p : kQuick) {
        if (fmod(f.lc(), Int(static_cast<long>(p))) == 0) continue;
        if (!mp_is_squarefree(f, p)) continue;
        if (mp_degree_pattern(f, p).size() == 1) return true;
    }
    return zassenhaus_squarefree(f).size() == 1;
}

}  // namespace qfa
