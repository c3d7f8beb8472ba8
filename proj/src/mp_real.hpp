#pragma once

// Minimal RAII wrapper over mpfr_t with round-to-nearest arithmetic at an
// explicit precision, plus the directed-rounding conversions used when
// turning exact rationals into certified bounds.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace sumgrowth::detail {

class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(mpfr_prec_t prec, const mpq_class& q, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), rnd);
    }
    MpReal(mpfr_prec_t prec, double d) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    mpq_class to_rational() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend MpReal operator+(const MpReal& a, const MpReal& b) { return op(mpfr_add, a, b); }
    friend MpReal operator-(const MpReal& a, const MpReal& b) { return op(mpfr_sub, a, b); }
    friend MpReal operator*(const MpReal& a, const MpReal& b) { return op(mpfr_mul, a, b); }
    friend MpReal operator/(const MpReal& a, const MpReal& b) { return op(mpfr_div, a, b); }
    MpReal operator-() const {
        MpReal r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

private:
    template <class F>
    static MpReal op(F f, const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

struct MpComplex {
    MpReal re, im;
    explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpReal den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    /// |z|^2
    MpReal norm() const { return re * re + im * im; }
};

/// Upper bound (as an exact dyadic rational) of sqrt(q) for q >= 0.
inline mpq_class sqrt_upper(const mpq_class& q, mpfr_prec_t prec) {
    MpReal r(prec, q, MPFR_RNDU);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
    return r.to_rational();
}

/// Lower bound (as an exact dyadic rational) of sqrt(q) for q >= 0.
inline mpq_class sqrt_lower(const mpq_class& q, mpfr_prec_t prec) {
    MpReal r(prec, q, MPFR_RNDD);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDD);
    return r.to_rational();
}

/// Rounds q outward to `prec` bits: returns a dyadic rational d with d <= q (down) or d >= q (up).
inline mpq_class round_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    MpReal r(prec, q, rnd);
    return r.to_rational();
}

}  // namespace sumgrowth::detail
