#pragma once

#include <string>

#include "bgl3/bigfloat.hpp"
#include "bgl3/rational.hpp"
#include "bgl3/regulated.hpp"

namespace bgl3 {

// The three computation fields share one trait surface so every module
// downstream stays field-generic.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static constexpr bool exact = true;
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc from_rational(const Rational& r) { return RatFunc(r); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string to_string(const RatFunc& x) { return x.to_string(); }
    static constexpr bool exact = true;
};

template <>
struct FieldTraits<BigComplex> {
    static BigComplex zero() { return BigComplex(0); }
    static BigComplex one() { return BigComplex(1); }
    static BigComplex from_rational(const Rational& r) { return BigComplex(r); }
    static bool is_zero(const BigComplex& x) { return x.is_zero(); }
    static std::string to_string(const BigComplex& x) { return x.to_string(); }
    static constexpr bool exact = false;
};

// Deformation parameter and the derived constants every formula needs.
template <class F>
struct FieldCtx {
    F q;
    F qinv;
    F kappa; // q - q^{-1}

    static FieldCtx make(const F& q) {
        if (FieldTraits<F>::is_zero(q)) throw DegenerateQError("q = 0");
        F qinv = FieldTraits<F>::one() / q;
        if (q == qinv) throw DegenerateQError("q^2 = 1");
        return FieldCtx{q, qinv, q - qinv};
    }

    static FieldCtx make_from_rational(const Rational& q) {
        return make(FieldTraits<F>::from_rational(q));
    }

    F qsq() const { return q * q; }
    // (-q)^e for integer e
    F neg_q_pow(long e) const {
        F base = e >= 0 ? q : qinv;
        long k = e >= 0 ? e : -e;
        F acc = FieldTraits<F>::one();
        for (long i = 0; i < k; ++i) acc = acc * base;
        if (k % 2 == 1) acc = -acc;
        return acc;
    }
};

} // namespace bgl3
