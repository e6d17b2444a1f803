#pragma once

#include <mpfr.h>

#include <string>

#include "sdg/rational.hpp"

namespace sdg {

/// Binary floating-point scalar with configurable mantissa width.
///
/// Wraps an mpfr_t with value semantics. The precision of a binary operation
/// is the larger of the operands' precisions; rounding is to nearest.
/// Default mantissa width is 256 bits.
class Real {
  public:
    static constexpr mpfr_prec_t kDefaultPrec = 256;

    Real() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
    /// Zero with the given mantissa width.
    static Real with_prec(mpfr_prec_t prec) {
        Real r;
        mpfr_set_prec(r.v_, prec);
        mpfr_set_zero(r.v_, 1);
        return r;
    }
    Real(double x, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(long x, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(int x, mpfr_prec_t prec = kDefaultPrec) : Real(static_cast<long>(x), prec) {}
    Real(const Rational& q, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    /// Parse a decimal literal such as "1e-30" or "2.5".
    static Real parse(const std::string& text, mpfr_prec_t prec = kDefaultPrec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string with enough digits to round-trip at this precision.
    std::string str() const;

    friend Real operator-(const Real& a) {
        Real r = with_prec(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b);

    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

    friend Real abs(const Real& a) {
        Real r = with_prec(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& a) { return un(mpfr_exp, a); }
    friend Real sin(const Real& a) { return un(mpfr_sin, a); }
    friend Real cos(const Real& a) { return un(mpfr_cos, a); }
    friend Real sqrt(const Real& a);
    friend Real log(const Real& a);
    friend Real pow_si(const Real& a, long e);

  private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(BinOp op, const Real& a, const Real& b) {
        Real r = with_prec(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(UnOp op, const Real& a) {
        Real r = with_prec(a.prec());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

Real abs(const Real& a);
Real exp(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real pow_si(const Real& a, long e);

} // namespace sdg
