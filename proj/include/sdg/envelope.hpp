#pragma once

#include <optional>
#include <vector>

#include "sdg/expr.hpp"
#include "sdg/jet.hpp"
#include "sdg/resultant.hpp"

namespace sdg {

/// One-parameter family of plane curves S_t = {(x,y) | F(x,y,t) = 0}.
struct Family {
    Expr F;

    explicit Family(Expr f) : F(std::move(f)) {
        if (F.arity() != 3) throw usage_error("a family needs arity exactly 3: x, y, t");
    }
    static Family parse(const std::string& text) { return Family(Expr::parse(text, 3)); }
};

/// The discriminant system F = 0, dF/dt = 0.
struct CharacteristicSystem {
    Expr F;
    Expr Ft;
    bool degenerate; // Ft identically zero (t-independent family)
};

/// Ft is produced by lifting F along t + d with expression coefficients.
CharacteristicSystem characteristic_system(const Family& fam);

struct EnvelopeSample {
    Real t, x, y;
};

struct EnvelopeLocus {
    std::optional<Polynomial> eliminant; // polynomial in (x, y), exact path
    bool degenerate = false;
    std::vector<EnvelopeSample> samples; // numeric path
};

/// Exact path: eliminate t by the Sylvester resultant of (F, Ft).
/// Requires polynomial F; `squarefree` divides out repeated factors.
EnvelopeLocus envelope_eliminate(const Family& fam, bool squarefree = false);

struct SampleOptions {
    Real t_min = Real(-1), t_max = Real(1);
    int t_count = 32;
    Real box = Real(4);     // Newton starts on [-box, box]^2
    int starts = 6;         // starts per axis
    Real tol = Real::parse("1e-12");
    mpfr_prec_t prec = 64;
    int max_iter = 60;
};

/// Numeric fallback: per-t damped Newton on the discriminant system.
EnvelopeLocus envelope_sample(const Family& fam, const SampleOptions& opt = {});

/// Exact synthetic test: F(pt, t0 + eps) vanishes identically in D.
bool synthetic_characteristic_check(const Family& fam, const Rational& t0, const Rational& px,
                                    const Rational& py);
/// Numeric variant: both D-coefficients within tol.
bool synthetic_characteristic_check(const Family& fam, const Real& t0, const Real& px,
                                    const Real& py, const Real& tol);

/// First-order contact of S_{t0} and the eliminant's zero set at pt:
/// the two gradients are parallel within tol. A vanishing gradient on
/// either side makes the direction undecidable.
bool touching_check(const Family& fam, const Real& t0, const Real& px, const Real& py,
                    const EnvelopeLocus& locus, const Real& tol);

} // namespace sdg
