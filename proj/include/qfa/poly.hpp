#pragma once

// Dense integer polynomials, low degree first. Degrees in this project stay
// below ~20, so everything is plain schoolbook with exact coefficients.

#include <algorithm>
#include <vector>

#include "qfa/numeric.hpp"

namespace qfa {

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly from_longs(const std::vector<long>& v) {
        std::vector<Int> c(v.begin(), v.end());
        return IntPoly(std::move(c));
    }

    static IntPoly x_power(std::size_t k, Int coeff = 1) {
        std::vector<Int> c(k + 1, Int(0));
        c[k] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lc() const {
        static const Int zero(0);
        return c_.empty() ? zero : c_.back();
    }
    const Int& operator[](std::size_t i) const {
        static const Int zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return IntPoly(std::move(r));
    }

    IntPoly operator-(const IntPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return IntPoly(std::move(r));
    }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(r));
    }

    IntPoly operator*(const Int& k) const {
        if (k == 0) return {};
        std::vector<Int> r = c_;
        for (auto& x : r) x *= k;
        return IntPoly(std::move(r));
    }

    IntPoly operator-() const { return *this * Int(-1); }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(r));
    }

    Int eval(const Int& x) const {
        Int r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
        return r;
    }

    Int content() const {
        Int g(0);
        for (const auto& x : c_) g = gcd_int(g, x);
        return g;
    }

    IntPoly primitive_part() const {
        if (is_zero()) return {};
        Int g = content();
        if (lc() < 0) g = -g;
        std::vector<Int> r = c_;
        for (auto& x : r) x = divexact(x, g);
        return IntPoly(std::move(r));
    }

    // f(x + a)
    IntPoly shift(const Int& a) const {
        IntPoly r;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r = r.mul_by_x_plus(a);
            r = r + IntPoly::constant(c_[i]);
        }
        return r;
    }

    // x^deg * f(1/x)
    IntPoly reversed() const {
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Int& a = c_[i];
            if (a == 0) continue;
            if (!s.empty()) s += (a > 0) ? " + " : " - ";
            else if (a < 0) s += "-";
            Int aa = abs(a);
            bool unit = (aa == 1) && i > 0;
            if (!unit) s += aa.get_str();
            if (i > 0) {
                if (!unit) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    IntPoly mul_by_x_plus(const Int& a) const {
        // f -> f*(x) shifted accumulate helper: returns f*x + a*f
        if (is_zero()) return {};
        std::vector<Int> r(c_.size() + 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i + 1] += c_[i];
            r[i] += c_[i] * a;
        }
        return IntPoly(std::move(r));
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Exact division; throws unless divisor divides evenly over Q with integer
// quotient times content bookkeeping left to the caller.
inline bool try_divide(const IntPoly& f, const IntPoly& g, IntPoly& quot) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    if (f.is_zero()) {
        quot = IntPoly{};
        return true;
    }
    if (f.degree() < g.degree()) return false;
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> q(f.degree() - g.degree() + 1, Int(0));
    const Int& glc = g.lc();
    for (int i = f.degree() - g.degree(); i >= 0; --i) {
        Int& top = rem[i + g.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), glc.get_mpz_t())) return false;
        Int qi = divexact(top, glc);
        q[i] = qi;
        for (int j = 0; j <= g.degree(); ++j) rem[i + j] -= qi * g[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    quot = IntPoly(std::move(q));
    return true;
}

// Pseudo remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r with the exact
// classical multiplier (padded when reduction terminates early).
inline IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DomainError("pseudo_rem by zero");
    if (f.degree() < g.degree()) throw DomainError("pseudo_rem needs deg f >= deg g");
    IntPoly r = f;
    int dg = g.degree();
    const Int& glc = g.lc();
    int steps = f.degree() - dg + 1;
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        IntPoly t = IntPoly::x_power(static_cast<std::size_t>(k), r.lc());
        r = r * glc - t * g;
        --steps;
    }
    while (steps-- > 0) r = r * glc;
    return r;
}

// GCD over Z via primitive PRS.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Int cont = gcd_int(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = a * cont;
    if (g.lc() < 0) g = -g;
    return g;
}

// Resultant via the subresultant PRS (Cohen, Alg. 3.3.7).
inline Int resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Int s(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    if (b.degree() == 0) return s * pow_int(b.lc(), static_cast<unsigned long>(a.degree()));
    Int g(1), h(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return 0;  // positive-degree common factor
        a = std::move(b);
        Int denom = g * pow_int(h, static_cast<unsigned long>(delta));
        std::vector<Int> qc(r.coeffs().size());
        for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = divexact(r.coeffs()[i], denom);
        b = IntPoly(std::move(qc));
        g = a.lc();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divexact(pow_int(g, static_cast<unsigned long>(delta)),
                         pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) {
            int dA = a.degree();
            Int num = pow_int(b.lc(), static_cast<unsigned long>(dA));
            Int den = dA >= 1 ? pow_int(h, static_cast<unsigned long>(dA - 1)) : Int(1);
            return s * divexact(num, den);
        }
    }
}

inline Int poly_discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    if (f.degree() == 1) return 1;
    Int res = resultant(f, f.derivative());
    Int disc = divexact(res, f.lc());
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) disc = -disc;
    return disc;
}

}  // namespace qfa
