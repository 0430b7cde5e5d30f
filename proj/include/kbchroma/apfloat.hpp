#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "kbchroma/poly.hpp"
#include "kbchroma/rational.hpp"

namespace kbchroma {

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// working precision in bits; binary operations produce a result at the
/// larger of the two operand precisions, so precision never silently decays.
class ApFloat {
  public:
    static constexpr long kDefaultPrec = 256;

    explicit ApFloat(long prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    ApFloat(const ApFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    ApFloat(ApFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    ApFloat& operator=(const ApFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ApFloat& operator=(ApFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~ApFloat() { mpfr_clear(v_); }

    static ApFloat from(double x, long prec = kDefaultPrec) {
        ApFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static ApFloat from(const Rational& x, long prec = kDefaultPrec) {
        ApFloat r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static ApFloat from(long x, long prec = kDefaultPrec) {
        ApFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    long precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    ApFloat operator-() const {
        ApFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

#define KBCHROMA_APFLOAT_BINOP(op, fn)                          \
    ApFloat operator op(const ApFloat& o) const {               \
        ApFloat r(std::max(precision(), o.precision()));        \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                          \
        return r;                                               \
    }                                                           \
    ApFloat& operator op##=(const ApFloat& o) { return *this = *this op o; }

    KBCHROMA_APFLOAT_BINOP(+, mpfr_add)
    KBCHROMA_APFLOAT_BINOP(-, mpfr_sub)
    KBCHROMA_APFLOAT_BINOP(*, mpfr_mul)
    KBCHROMA_APFLOAT_BINOP(/, mpfr_div)
#undef KBCHROMA_APFLOAT_BINOP

    bool operator<(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool operator==(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }
    bool operator!=(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) != 0; }

    friend ApFloat abs(const ApFloat& x) {
        ApFloat r(x.precision());
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend ApFloat sqrt(const ApFloat& x) {
        ApFloat r(x.precision());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend ApFloat hypot(const ApFloat& a, const ApFloat& b) {
        ApFloat r(std::max(a.precision(), b.precision()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    // x^(1/n)
    friend ApFloat root(const ApFloat& x, unsigned long n) {
        ApFloat r(x.precision());
#if MPFR_VERSION_MAJOR >= 4
        mpfr_rootn_ui(r.v_, x.v_, n, MPFR_RNDN);
#else
        mpfr_root(r.v_, x.v_, n, MPFR_RNDN);
#endif
        return r;
    }
    friend ApFloat ldexp2(const ApFloat& x, long e) {
        ApFloat r(x.precision());
        mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
        return r;
    }

    std::string str(size_t digits = 0) const;

  private:
    mpfr_t v_;
};

/// Complex value with ApFloat components.
struct ApComplex {
    ApFloat re, im;

    explicit ApComplex(long prec = ApFloat::kDefaultPrec) : re(prec), im(prec) {}
    ApComplex(ApFloat r, ApFloat i) : re(std::move(r)), im(std::move(i)) {}

    static ApComplex from(double r, double i, long prec = ApFloat::kDefaultPrec) {
        return {ApFloat::from(r, prec), ApFloat::from(i, prec)};
    }
    static ApComplex from(const Rational& r, long prec = ApFloat::kDefaultPrec) {
        return {ApFloat::from(r, prec), ApFloat(prec)};
    }

    long precision() const { return std::max(re.precision(), im.precision()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ApComplex operator-() const { return {-re, -im}; }
    ApComplex operator+(const ApComplex& o) const { return {re + o.re, im + o.im}; }
    ApComplex operator-(const ApComplex& o) const { return {re - o.re, im - o.im}; }
    ApComplex operator*(const ApComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ApComplex operator/(const ApComplex& o) const {
        ApFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    ApComplex& operator+=(const ApComplex& o) { return *this = *this + o; }
    ApComplex& operator-=(const ApComplex& o) { return *this = *this - o; }

    friend ApFloat abs(const ApComplex& z) { return hypot(z.re, z.im); }
    friend ApFloat norm(const ApComplex& z) { return z.re * z.re + z.im * z.im; }
};

/// Horner evaluation of an exact polynomial at a complex point, carried out
/// at the point's working precision.
ApComplex eval_complex(const RationalPoly& p, const ApComplex& q);
ApFloat eval_ap(const RationalPoly& p, const ApFloat& q);

}  // namespace kbchroma
