#pragma once

// Exact integer/rational layer. All arithmetic is arbitrary precision via
// GMP; nothing here is allowed to round.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfa {

using Int = mpz_class;
using Rat = mpq_class;

// Invalid mathematical input (singular curve, non-squarefree d, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario the toolkit deliberately does not model (e.g. split primes).
struct UnsupportedScenario : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration or iteration budget exhausted.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact rational square root, if one exists.
inline bool rat_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    Int num = q.get_num(), den = q.get_den();
    if (!is_square(num) || !is_square(den)) return false;
    out = make_rat(isqrt(num), isqrt(den));
    return true;
}

inline int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division (GMP fdiv), also for negative operands.
inline Int fdiv(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline unsigned long valuation(Int n, const Int& p) {
    if (n == 0) throw DomainError("valuation of zero");
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n = divexact(n, p);
        ++v;
    }
    return v;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool fits_long(const Int& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

inline long to_long(const Int& n) {
    if (!fits_long(n)) throw DomainError("integer out of long range");
    return mpz_get_si(n.get_mpz_t());
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Deterministic 64-bit PRNG (xorshift*), used where an algorithm needs
// random splitting elements but output must be reproducible.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    std::uint64_t next_below(std::uint64_t n) { return n ? next() % n : 0; }

  private:
    std::uint64_t state_;
};

}  // namespace qfa
