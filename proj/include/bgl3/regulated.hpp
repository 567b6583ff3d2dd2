#pragma once

#include <string>
#include <utility>

#include "bgl3/polynomial.hpp"

namespace bgl3 {

// One-variable rational function in the regulator eps, with exact rational
// coefficients.  Always stored normalized: common polynomial factors
// cancelled and the denominator monic, so equality is syntactic.  Degrees
// are bounded by a configurable cap (default 64); exceeding the cap after
// normalization is an error, never a truncation.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(long n) : num_(Poly::constant(Rational(n))), den_(Poly::constant(Rational(1))) {}
    explicit RatFunc(Rational c)
        : num_(Poly::constant(std::move(c))), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc epsilon() { return RatFunc(Poly::variable(), Poly::constant(Rational(1))); }
    static RatFunc from_rational(const Rational& c) { return RatFunc(c); }

    static int& degree_cap() {
        thread_local int cap = 64;
        return cap;
    }

    struct DegreeCapGuard {
        explicit DegreeCapGuard(int cap) : saved_(degree_cap()) { degree_cap() = cap; }
        ~DegreeCapGuard() { degree_cap() = saved_; }
        DegreeCapGuard(const DegreeCapGuard&) = delete;
        DegreeCapGuard& operator=(const DegreeCapGuard&) = delete;

    private:
        int saved_;
    };

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_[0] == den_[0]; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.degree() <= 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly da = Poly::divexact(a.den_, g);
        Poly db = Poly::divexact(b.den_, g);
        return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-cancel before multiplying to keep degrees down
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        Poly n1 = g1.degree() > 0 ? Poly::divexact(a.num_, g1) : a.num_;
        Poly d2 = g1.degree() > 0 ? Poly::divexact(b.den_, g1) : b.den_;
        Poly n2 = g2.degree() > 0 ? Poly::divexact(b.num_, g2) : b.num_;
        Poly d1 = g2.degree() > 0 ? Poly::divexact(a.den_, g2) : a.den_;
        return RatFunc(n1 * n2, d1 * d2);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw PoleError("RatFunc: division by zero");
        return a * RatFunc(b.den_, b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Value at eps = 0.  The stored form is fully cancelled, so a vanishing
    // denominator constant term signals a genuine (non-removable) pole.
    Rational eval_at_zero() const {
        if (num_.is_zero()) return Rational(0);
        Rational d0 = den_.at_zero();
        if (d0.is_zero()) throw PoleAtZeroError("RatFunc: pole at eps = 0");
        return num_.at_zero() / d0;
    }

    bool regular_at_zero() const { return num_.is_zero() || !den_.at_zero().is_zero(); }

    std::string to_string() const {
        if (den_.degree() == 0 && den_[0].is_one()) return "(" + num_.to_string() + ")";
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw PoleError("RatFunc: zero denominator");
        if (num_.is_zero()) {
            num_ = Poly();
            den_ = Poly::constant(Rational(1));
            return;
        }
        if (num_.degree() > 0 && den_.degree() > 0) {
            Poly g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = Poly::divexact(num_, g);
                den_ = Poly::divexact(den_, g);
            }
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
        int cap = degree_cap();
        if (num_.degree() > cap || den_.degree() > cap)
            throw DegreeCapError("RatFunc: degree cap " + std::to_string(cap) +
                                 " exceeded (num " + std::to_string(num_.degree()) + ", den " +
                                 std::to_string(den_.degree()) + ")");
    }

    Poly num_;
    Poly den_;
};

// Operation-level alias for the eps -> 0 limit.
inline Rational reg_eval_at_zero(const RatFunc& x) { return x.eval_at_zero(); }

} // namespace bgl3
