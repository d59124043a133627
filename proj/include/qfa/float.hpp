#pragma once

// Directed high-precision floating point on top of MPFR. Every analytic
// quantity in the bound chains is carried as an Interval whose endpoints are
// rounded outward, so comparisons against printed constants are certified.

#include <mpfr.h>

#include <cstdio>
#include <string>
#include <utility>

#include "qfa/numeric.hpp"

namespace qfa {

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, rnd);
        return r;
    }

    static BigFloat from_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }

    static BigFloat from_int(const Int& n, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, n.get_mpz_t(), rnd);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Correctly rounded decimal rendering, "%.<digits-1>Re".
    std::string to_sci(int digits) const {
        char* out = nullptr;
        mpfr_asprintf(&out, "%.*Re", digits - 1, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

  private:
    mpfr_t v_;
};

// Closed interval [lo, hi]; all operations round lo down and hi up.
class Interval {
  public:
    Interval() : lo_(), hi_() {}
    Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Interval exact_rat(const Rat& q, mpfr_prec_t prec) {
        return {BigFloat::from_rat(q, prec, MPFR_RNDD), BigFloat::from_rat(q, prec, MPFR_RNDU)};
    }

    static Interval exact_int(const Int& n, mpfr_prec_t prec) {
        return {BigFloat::from_int(n, prec, MPFR_RNDD), BigFloat::from_int(n, prec, MPFR_RNDU)};
    }

    static Interval from_decimal(const std::string& s, mpfr_prec_t prec) {
        return {BigFloat::from_string(s, prec, MPFR_RNDD), BigFloat::from_string(s, prec, MPFR_RNDU)};
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Interval operator+(const Interval& o) const {
        Interval r = blank(*this, o);
        mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator-(const Interval& o) const {
        Interval r = blank(*this, o);
        mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator-() const {
        Interval r = blank(*this, *this);
        mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator*(const Interval& o) const {
        // General sign handling: min/max over endpoint products.
        Interval r = blank(*this, o);
        mpfr_t c[8];
        const mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
        const mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
        for (int i = 0; i < 8; ++i) mpfr_init2(c[i], r.prec());
        int k = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                mpfr_mul(c[k], xs[i], ys[j], MPFR_RNDD);
                mpfr_mul(c[k + 4], xs[i], ys[j], MPFR_RNDU);
                ++k;
            }
        mpfr_set(r.lo_.get(), c[0], MPFR_RNDD);
        mpfr_set(r.hi_.get(), c[4], MPFR_RNDU);
        for (int i = 1; i < 4; ++i) {
            if (mpfr_cmp(c[i], r.lo_.get()) < 0) mpfr_set(r.lo_.get(), c[i], MPFR_RNDD);
            if (mpfr_cmp(c[i + 4], r.hi_.get()) > 0) mpfr_set(r.hi_.get(), c[i + 4], MPFR_RNDU);
        }
        for (auto& x : c) mpfr_clear(x);
        return r;
    }

    Interval operator/(const Interval& o) const {
        if (mpfr_sgn(o.lo_.get()) <= 0 && mpfr_sgn(o.hi_.get()) >= 0)
            throw DomainError("interval division by interval containing zero");
        Interval inv = blank(o, o);
        mpfr_ui_div(inv.lo_.get(), 1, o.hi_.get(), MPFR_RNDD);
        mpfr_ui_div(inv.hi_.get(), 1, o.lo_.get(), MPFR_RNDU);
        return *this * inv;
    }

    // Monotone increasing maps.
    Interval log() const {
        if (mpfr_sgn(lo_.get()) <= 0) throw DomainError("log of non-positive interval");
        Interval r = blank(*this, *this);
        mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval exp() const {
        Interval r = blank(*this, *this);
        mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval cbrt() const {
        Interval r = blank(*this, *this);
        mpfr_cbrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_cbrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval cube() const { return *this * *this * *this; }

    static Interval euler_gamma(mpfr_prec_t prec) {
        Interval r{BigFloat(prec), BigFloat(prec)};
        mpfr_const_euler(r.lo_.get(), MPFR_RNDD);
        mpfr_const_euler(r.hi_.get(), MPFR_RNDU);
        return r;
    }

    static Interval log_4pi(mpfr_prec_t prec) {
        // log(4*pi) with outward rounding at each step.
        mpfr_t pd, pu;
        mpfr_init2(pd, prec);
        mpfr_init2(pu, prec);
        mpfr_const_pi(pd, MPFR_RNDD);
        mpfr_const_pi(pu, MPFR_RNDU);
        mpfr_mul_ui(pd, pd, 4, MPFR_RNDD);
        mpfr_mul_ui(pu, pu, 4, MPFR_RNDU);
        Interval r{BigFloat(prec), BigFloat(prec)};
        mpfr_log(r.lo_.get(), pd, MPFR_RNDD);
        mpfr_log(r.hi_.get(), pu, MPFR_RNDU);
        mpfr_clear(pd);
        mpfr_clear(pu);
        return r;
    }

    bool certainly_less(const Interval& o) const { return mpfr_cmp(hi_.get(), o.lo_.get()) < 0; }
    bool certainly_greater(const Interval& o) const { return mpfr_cmp(lo_.get(), o.hi_.get()) > 0; }

    bool contains(const Rat& q) const {
        return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
    }

    BigFloat mid() const {
        BigFloat m(prec());
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
        return m;
    }

    double width() const {
        mpfr_t w;
        mpfr_init2(w, prec());
        mpfr_sub(w, hi_.get(), lo_.get(), MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    // Midpoint rendered at `digits` significant digits.
    std::string to_sci(int digits) const { return mid().to_sci(digits); }

  private:
    static Interval blank(const Interval& a, const Interval& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        return Interval{BigFloat(p), BigFloat(p)};
    }

    BigFloat lo_, hi_;
};

inline mpfr_prec_t prec_from_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 24);
}

}  // namespace qfa
