#pragma once

// Integer factorization sized for discriminant audits: trial division up to
// a configurable bound, then Pollard rho (Brent cycle) with an iteration
// budget. Running out of budget is a result, not an error: the unfactored
// cofactor is returned and marked.

#include <algorithm>
#include <vector>

#include "qfa/numeric.hpp"

namespace qfa {

struct PrimeFactorization {
    int sign = 1;
    std::vector<std::pair<Int, int>> factors;  // strictly increasing primes
    Int cofactor = 1;                          // composite remainder if incomplete
    bool complete = true;

    Int reconstruct() const {
        Int n(sign);
        for (const auto& [p, e] : factors) n *= pow_int(p, static_cast<unsigned long>(e));
        return n * cofactor;
    }

    bool support_subset_of(const std::vector<Int>& primes) const {
        for (const auto& [p, e] : this->factors) {
            bool ok = false;
            for (const auto& q : primes)
                if (p == q) ok = true;
            if (!ok) return false;
        }
        return true;
    }
};

struct FactorBudget {
    unsigned long trial_bound = 1000000;   // trial divide by all p <= bound
    unsigned long rho_iterations = 1 << 22;
    int rho_attempts = 24;
};

namespace factordetail {

inline Int pollard_brent(const Int& n, unsigned long budget, unsigned long c0) {
    // Brent's variant; deterministic start values.
    for (unsigned long c = c0; c < c0 + 4; ++c) {
        Int x(2), y(2), d(1), q(1);
        Int ys(y);
        unsigned long r = 1, iters = 0;
        const unsigned long batch = 128;
        while (d == 1 && iters < budget) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1 && iters < budget; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd_int(q, n);
                iters += lim;
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                d = gcd_int(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != 1 && d != n) return d;
    }
    return 1;
}

}  // namespace factordetail

inline PrimeFactorization factor_integer(Int n, const FactorBudget& budget = {}) {
    if (n == 0) throw DomainError("factor_integer(0)");
    PrimeFactorization out;
    if (n < 0) {
        out.sign = -1;
        n = -n;
    }
    if (n == 1) return out;

    auto push = [&out](const Int& p, int e) { out.factors.emplace_back(p, e); };

    // trial division (2, 3, then 6k+-1)
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        if (n == 1) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n = divexact(n, Int(static_cast<long>(p)));
            ++e;
        }
        if (e) push(Int(static_cast<long>(p)), e);
    }
    for (unsigned long p = 7; p <= budget.trial_bound && n > 1; p += 6) {
        for (unsigned long q : {p, p + 4}) {
            if (!mpz_divisible_ui_p(n.get_mpz_t(), q)) continue;
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
                n = divexact(n, Int(static_cast<long>(q)));
                ++e;
            }
            push(Int(static_cast<long>(q)), e);
        }
        if (Int(static_cast<long>(p)) * static_cast<long>(p) > n) break;
    }
    if (n == 1) return out;
    if (n <= Int(budget.trial_bound) * Int(budget.trial_bound) || is_probable_prime(n)) {
        push(n, 1);
        return out;
    }

    // rho phase on the remaining composite
    std::vector<Int> stack{n};
    int attempts = budget.rho_attempts;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            push(m, 1);
            continue;
        }
        Int d(1);
        if (attempts-- > 0) d = factordetail::pollard_brent(m, budget.rho_iterations, 1);
        if (d == 1 || d == m) {
            out.complete = false;
            out.cofactor *= m;
            continue;
        }
        stack.push_back(d);
        stack.push_back(divexact(m, d));
    }

    // merge duplicate primes, sort
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Int, int>> merged;
    for (auto& [p, e] : out.factors) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    out.factors = std::move(merged);
    return out;
}

// Squarefree test for desk-scale integers.
inline bool is_squarefree_int(const Int& n) {
    if (n == 0) return false;
    auto f = factor_integer(abs(n));
    if (!f.complete) throw BudgetExceeded("squarefree test: factorization incomplete");
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

// Squarefree core: product of primes with odd exponent, with the sign of n.
inline Int squarefree_core(const Int& n, const FactorBudget& budget = {}) {
    auto f = factor_integer(n, budget);
    if (!f.complete) throw BudgetExceeded("squarefree core: factorization incomplete");
    Int c(f.sign);
    for (const auto& [p, e] : f.factors)
        if (e & 1) c *= p;
    return c;
}

}  // namespace qfa
