#pragma once

#include "sdg/error.hpp"
#include "sdg/rational.hpp"
#include "sdg/real.hpp"

namespace sdg {

/// Evaluation mode of a computation: exact rational arithmetic, or binary
/// floats of configurable precision.
enum class Mode { exact, numeric };

template <typename S>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
    static constexpr bool elementary = false;
    static constexpr Mode mode = Mode::exact;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw domain_error("division by zero");
        return a / b;
    }
    static Rational pow(const Rational& a, int e);
    static Rational exp(const Rational&) { return fail("exp"); }
    static Rational log(const Rational&) { return fail("log"); }
    static Rational sin(const Rational&) { return fail("sin"); }
    static Rational cos(const Rational&) { return fail("cos"); }

  private:
    static Rational fail(const char* fn) {
        throw domain_error(std::string(fn) + " is not available in exact mode");
    }
};

template <>
struct scalar_ops<Real> {
    static constexpr bool elementary = true;
    static constexpr Mode mode = Mode::numeric;
    static Real from_rational(const Rational& q) { return Real(q); }
    static Real div(const Real& a, const Real& b) { return a / b; }
    static Real pow(const Real& a, int e) { return pow_si(a, e); }
    static Real exp(const Real& a) { return sdg::exp(a); }
    static Real log(const Real& a) { return sdg::log(a); }
    static Real sin(const Real& a) { return sdg::sin(a); }
    static Real cos(const Real& a) { return sdg::cos(a); }
};

inline Rational scalar_ops<Rational>::pow(const Rational& a, int e) {
    if (e < 0) {
        if (a == 0) throw domain_error("zero raised to negative power");
        return Rational(1) / pow(a, -e);
    }
    Rational acc(1), base = a;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace sdg
