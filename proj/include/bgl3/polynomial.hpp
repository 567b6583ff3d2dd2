#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bgl3/rational.hpp"

namespace bgl3 {

// Univariate polynomial over Rational, coefficients ascending in the
// regulator variable.  The coefficient vector never ends in zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly constant(Rational c) { return Poly(std::move(c)); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& operator[](size_t i) const { return c_[i]; }
    size_t size() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational at_zero() const { return c_.empty() ? Rational(0) : c_.front(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly scaled(const Rational& s) const {
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Long division; returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw PoleError("Poly: division by zero polynomial");
        Poly rem = a;
        std::vector<Rational> q;
        long db = b.degree();
        if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rational(0));
        Rational linv = b.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= db) {
            long shift = rem.degree() - db;
            Rational f = rem.leading() * linv;
            q[shift] = f;
            std::vector<Rational> rc = rem.c_;
            for (long i = 0; i <= db; ++i) rc[shift + i] -= f * b.c_[i];
            rc.pop_back(); // leading term cancels exactly
            rem = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), rem};
    }

    // Exact division; throws if the remainder is nonzero.
    static Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error("Poly: inexact division");
        return q;
    }

    std::string to_string(const std::string& var = "eps") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].to_string();
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

namespace detail {

inline void ztrim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class zcontent(const std::vector<mpz_class>& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline std::vector<mpz_class> zprimitive(std::vector<mpz_class> p) {
    ztrim(p);
    mpz_class g = zcontent(p);
    if (g > 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    if (!p.empty() && p.back() < 0) {
        for (auto& c : p) c = -c;
    }
    return p;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
inline std::vector<mpz_class> zprem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    long db = static_cast<long>(b.size()) - 1;
    const mpz_class& lb = b.back();
    long e = static_cast<long>(a.size()) - 1 - db + 1;
    while (!a.empty() && static_cast<long>(a.size()) - 1 >= db) {
        mpz_class la = a.back();
        long shift = static_cast<long>(a.size()) - 1 - db;
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        ztrim(a);
        --e;
    }
    if (e > 0) {
        mpz_class s;
        mpz_pow_ui(s.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= s;
    }
    return a;
}

// Subresultant PRS gcd of primitive integer polynomials.
inline std::vector<mpz_class> zgcd(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    mpz_class g = 1, h = 1;
    for (;;) {
        long delta = (static_cast<long>(a.size()) - 1) - (static_cast<long>(b.size()) - 1);
        std::vector<mpz_class> r = zprem(a, b);
        if (r.empty()) return zprimitive(std::move(b));
        if (r.size() == 1) return {mpz_class(1)};
        a = std::move(b);
        b = std::move(r);
        mpz_class divisor;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor = g * hd;
        for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        g = a.back();
        if (delta > 0) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
}

inline std::vector<mpz_class> to_integer_poly(const Poly& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) r.push_back(c.numerator() * (lcm / c.denominator()));
    return r;
}

} // namespace detail

// gcd of the primitive parts; the result is primitive with positive leading
// coefficient (constant 1 when coprime).
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto za = detail::to_integer_poly(a);
    auto zb = detail::to_integer_poly(b);
    auto zg = detail::zgcd(std::move(za), std::move(zb));
    std::vector<Rational> rc;
    rc.reserve(zg.size());
    for (auto& c : zg) rc.emplace_back(mpq_class(c));
    return Poly(std::move(rc));
}

} // namespace bgl3
