#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "bgl3/error.hpp"
#include "bgl3/rational.hpp"

namespace bgl3 {

// Real high-precision float on mpfr.  Precision is tracked per value in
// decimal digits; binary operations widen to the larger operand precision,
// never narrowing silently.
class BigFloat {
public:
    static constexpr int kMinDigits = 30;

    static int& default_digits() {
        thread_local int digits = 50;
        return digits;
    }

    struct PrecisionGuard {
        explicit PrecisionGuard(int digits) : saved_(default_digits()) {
            if (digits < kMinDigits) throw ConfigError("BigFloat: precision below 30 digits");
            default_digits() = digits;
        }
        ~PrecisionGuard() { default_digits() = saved_; }
        PrecisionGuard(const PrecisionGuard&) = delete;
        PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    private:
        int saved_;
    };

    static mpfr_prec_t bits_for(int digits) {
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626) + 32);
    }

    BigFloat() : digits_(default_digits()) {
        mpfr_init2(v_, bits_for(digits_));
        mpfr_set_zero(v_, 1);
    }
    explicit BigFloat(long n, int digits = 0) : digits_(digits > 0 ? digits : default_digits()) {
        check_digits();
        mpfr_init2(v_, bits_for(digits_));
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    explicit BigFloat(const Rational& r, int digits = 0)
        : digits_(digits > 0 ? digits : default_digits()) {
        check_digits();
        mpfr_init2(v_, bits_for(digits_));
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    explicit BigFloat(const std::string& s, int digits = 0)
        : digits_(digits > 0 ? digits : default_digits()) {
        check_digits();
        mpfr_init2(v_, bits_for(digits_));
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ConfigError("BigFloat: cannot parse '" + s + "'");
    }

    BigFloat(const BigFloat& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        std::swap(digits_, o.digits_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    int digits() const { return digits_; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat binop(const BigFloat& a, const BigFloat& b,
                          int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        BigFloat r(0L, std::max(a.digits_, b.digits_));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw PoleError("BigFloat: division by zero");
        return binop(a, b, mpfr_div);
    }
    BigFloat operator-() const {
        BigFloat r = *this;
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    BigFloat abs() const {
        BigFloat r = *this;
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    static BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(0L, std::max(a.digits_, b.digits_));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    // 10^e at the given precision; used for tolerance thresholds.
    static BigFloat pow10(long e, int digits = 0) {
        BigFloat r(0L, digits > 0 ? digits : default_digits());
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    std::string to_string(int out_digits = 0) const {
        int nd = out_digits > 0 ? out_digits : digits_;
        char fmt[32];
        std::snprintf(fmt, sizeof(fmt), "%%.%dRe", nd);
        char* s = nullptr;
        mpfr_asprintf(&s, fmt, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    void check_digits() const {
        if (digits_ < kMinDigits) throw ConfigError("BigFloat: precision below 30 digits");
    }

    mpfr_t v_;
    int digits_;
};

// Complex high-precision float: the FloatScalar field.
class BigComplex {
public:
    BigComplex() = default;
    BigComplex(long n) : re_(n) {} // NOLINT: implicit field constant
    explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(0L, re_.digits()) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const Rational& r, int digits = 0) : re_(r, digits), im_(0L, re_.digits()) {}

    static BigComplex from_rational(const Rational& r) { return BigComplex(r); }

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == BigFloat(1L, re_.digits()); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        if (b.is_zero()) throw PoleError("BigComplex: division by zero");
        BigFloat n = b.re_ * b.re_ + b.im_ * b.im_;
        return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / n,
                          (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigFloat magnitude() const { return BigFloat::hypot(re_, im_); }

    std::string to_string(int out_digits = 0) const {
        return re_.to_string(out_digits) + (im_.sign() < 0 ? "" : "+") + im_.to_string(out_digits) +
               "i";
    }

private:
    BigFloat re_;
    BigFloat im_;
};

} // namespace bgl3
