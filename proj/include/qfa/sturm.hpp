#pragma once

// Real root counting by Sturm sequences, exact over Z (pseudo-remainders
// with sign control).

#include <utility>
#include <vector>

#include "qfa/numeric.hpp"
#include "qfa/poly.hpp"

namespace qfa {

namespace sturmdetail {

// divide by positive content, preserving sign
inline IntPoly reduce_content(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = f.content();
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = divexact(f[i], g);
    return IntPoly(std::move(c));
}

inline int sign_at_infinity(const IntPoly& f, bool positive) {
    if (f.is_zero()) return 0;
    int s = sgn(f.lc());
    if (!positive && (f.degree() & 1)) s = -s;
    return s;
}

}  // namespace sturmdetail

// Sturm chain of a squarefree polynomial.
inline std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = pseudo_rem(a, b);
        // pseudo_rem scales by lc(b)^(da-db+1); flip so that r ~ +rem
        int delta = a.degree() - b.degree() + 1;
        if ((b.lc() < 0) && (delta & 1)) r = -r;
        r = sturmdetail::reduce_content(-r);
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Number of real roots (r1) and complex-conjugate pairs (r2) of a squarefree
// polynomial.
inline std::pair<int, int> real_root_count(const IntPoly& f) {
    if (f.degree() < 1) throw DomainError("real_root_count: degree >= 1 required");
    if (poly_gcd(f, f.derivative()).degree() > 0)
        throw DomainError("real_root_count: input not squarefree");
    auto chain = sturm_chain(f);
    auto variations = [&](bool pos) {
        int var = 0, prev = 0;
        for (const auto& g : chain) {
            int s = sturmdetail::sign_at_infinity(g, pos);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    };
    int r1 = variations(false) - variations(true);
    int r2 = (f.degree() - r1) / 2;
    return {r1, r2};
}

}  // namespace qfa
