#include "sdg/real.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

Real Real::parse(const std::string& text, mpfr_prec_t prec) {
    Real r = with_prec(prec);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw usage_error("bad numeric literal: '" + text + "'");
    return r;
}

std::string Real::str() const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (is_zero()) return "0";
    // ceil(prec * log10(2)) + 2 digits round-trips
    size_t digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    std::string sign = neg ? "-" : "";
    long exp10 = static_cast<long>(e); // value = 0.mant * 10^exp10
    // positional notation for moderate exponents, scientific otherwise
    if (exp10 > 0 && exp10 <= 18) {
        if (static_cast<long>(mant.size()) <= exp10)
            return sign + mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
        return sign + mant.substr(0, static_cast<size_t>(exp10)) + "." +
               mant.substr(static_cast<size_t>(exp10));
    }
    if (exp10 <= 0 && exp10 > -5)
        return sign + "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp10 - 1);
    return out;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    Real r = Real::with_prec(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    if (a.sign() < 0) throw domain_error("sqrt of negative number");
    Real r = Real::with_prec(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    if (a.sign() <= 0) throw domain_error("log of non-positive number");
    Real r = Real::with_prec(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real pow_si(const Real& a, long e) {
    if (e < 0 && a.is_zero()) throw domain_error("zero raised to negative power");
    Real r = Real::with_prec(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

} // namespace sdg
