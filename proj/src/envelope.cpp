#include "sdg/envelope.hpp"

#include <cmath>

namespace sdg {

CharacteristicSystem characteristic_system(const Family& fam) {
    Expr ft = fam.F.derivative(2);
    bool degenerate = ft.is_constant() && ft.constant_value() == 0;
    return {fam.F, ft, degenerate};
}

namespace {

/// Drop the (absent) variable t from a polynomial over (x, y, t).
Polynomial restrict_xy(const Polynomial& p) {
    if (p.degree_in(2) > 0) throw error("eliminant unexpectedly mentions t");
    Polynomial out(2);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c);
    return out;
}

} // namespace

EnvelopeLocus envelope_eliminate(const Family& fam, bool squarefree) {
    auto sys = characteristic_system(fam);
    EnvelopeLocus out;
    if (sys.degenerate) {
        out.degenerate = true;
        out.eliminant = Polynomial::zero(2);
        return out;
    }
    Polynomial F = fam.F.to_polynomial(); // throws domain_error when non-polynomial
    Polynomial Ft = sys.Ft.to_polynomial();
    if (Ft.is_zero() || F.degree_in(2) <= 0) {
        out.degenerate = true;
        out.eliminant = Polynomial::zero(2);
        return out;
    }
    Polynomial elim(3);
    if (Ft.degree_in(2) == 0) {
        // Res_t(F, c) = c^deg_t(F) for a t-free second argument
        elim = Ft.pow(F.degree_in(2));
    } else {
        elim = resultant(F, Ft, 2);
    }
    Polynomial exy = restrict_xy(elim);
    if (exy.is_zero()) out.degenerate = true;
    if (squarefree && !exy.is_zero()) exy = squarefree_part(exy);
    out.eliminant = exy;
    return out;
}

namespace {

struct NewtonSystem {
    Expr F, Ft;

    Real residual(const std::vector<Real>& p) const {
        Real a = abs(F.eval(p)), b = abs(Ft.eval(p));
        return a < b ? b : a;
    }
};

} // namespace

EnvelopeLocus envelope_sample(const Family& fam, const SampleOptions& opt) {
    auto sys = characteristic_system(fam);
    EnvelopeLocus out;
    if (sys.degenerate) {
        out.degenerate = true;
        return out;
    }
    NewtonSystem ns{sys.F, sys.Ft};
    Expr Fx = sys.F.derivative(0), Fy = sys.F.derivative(1);
    Expr Ftx = sys.Ft.derivative(0), Fty = sys.Ft.derivative(1);

    Real dedupe_eps = Real::parse("1e-6");
    for (int it = 0; it < opt.t_count; ++it) {
        Real t = opt.t_min + (opt.t_max - opt.t_min) * Real(it, opt.prec) /
                                 Real(std::max(opt.t_count - 1, 1), opt.prec);
        std::vector<EnvelopeSample> found;
        for (int gx = 0; gx < opt.starts; ++gx) {
            for (int gy = 0; gy < opt.starts; ++gy) {
                Real frac_x = Real(2 * gx + 1, opt.prec) / Real(2 * opt.starts, opt.prec);
                Real frac_y = Real(2 * gy + 1, opt.prec) / Real(2 * opt.starts, opt.prec);
                Real x = (frac_x * Real(2, opt.prec) - Real(1, opt.prec)) * opt.box;
                Real y = (frac_y * Real(2, opt.prec) - Real(1, opt.prec)) * opt.box;
                std::vector<Real> p{x, y, t};
                bool converged = false;
                for (int iter = 0; iter < opt.max_iter; ++iter) {
                    Real f = ns.F.eval(p), g = ns.Ft.eval(p);
                    Real res = abs(f) < abs(g) ? abs(g) : abs(f);
                    if (res < opt.tol) {
                        converged = true;
                        break;
                    }
                    Real a = Fx.eval(p), b = Fy.eval(p);
                    Real c = Ftx.eval(p), d = Fty.eval(p);
                    Real det = a * d - b * c;
                    if (det.is_zero()) break;
                    Real dx = (f * d - g * b) / det;
                    Real dy = (a * g - c * f) / det;
                    // damping: halve the step until the residual decreases
                    Real lambda(1, opt.prec);
                    Real base_res = res;
                    bool stepped = false;
                    for (int h = 0; h < 24; ++h) {
                        std::vector<Real> q{p[0] - lambda * dx, p[1] - lambda * dy, t};
                        if (ns.residual(q) < base_res) {
                            p = q;
                            stepped = true;
                            break;
                        }
                        lambda = lambda / Real(2, opt.prec);
                    }
                    if (!stepped) break;
                }
                if (!converged) continue;
                bool dup = false;
                for (const auto& s : found)
                    if (abs(s.x - p[0]) < dedupe_eps && abs(s.y - p[1]) < dedupe_eps) dup = true;
                if (!dup) found.push_back({t, p[0], p[1]});
            }
        }
        for (auto& s : found) out.samples.push_back(std::move(s));
    }
    return out;
}

bool synthetic_characteristic_check(const Family& fam, const Rational& t0, const Rational& px,
                                    const Rational& py) {
    if (!fam.F.is_polynomial())
        throw domain_error("exact synthetic check requires a polynomial family");
    WeilPtr D = weil_D();
    std::vector<Rational> base{px, py, t0};
    auto lift = taylor_lift(fam.F, jet_point_single(std::move(base), 2, D));
    return lift.is_zero();
}

bool synthetic_characteristic_check(const Family& fam, const Real& t0, const Real& px,
                                    const Real& py, const Real& tol) {
    WeilPtr D = weil_D();
    std::vector<Real> base{px, py, t0};
    auto lift = taylor_lift(fam.F, jet_point_single(std::move(base), 2, D));
    for (const auto& c : lift.coeffs())
        if (!(abs(c) <= tol)) return false;
    return true;
}

bool touching_check(const Family& fam, const Real& t0, const Real& px, const Real& py,
                    const EnvelopeLocus& locus, const Real& tol) {
    if (!locus.eliminant)
        throw usage_error("touching_check needs an exact eliminant");
    std::vector<Real> p3{px, py, t0};
    if (!(abs(fam.F.eval(p3)) <= tol))
        throw domain_error("point does not lie on the family member");
    std::vector<Real> p2{px, py};
    if (!(abs(locus.eliminant->eval<Real>(p2)) <= tol))
        throw domain_error("point does not lie on the locus");

    Real gfx = derivative(fam.F, 0, p3), gfy = derivative(fam.F, 1, p3);
    Polynomial ex = locus.eliminant->derivative(0), ey = locus.eliminant->derivative(1);
    Real gex = ex.eval<Real>(p2), gey = ey.eval<Real>(p2);

    Real nf = sqrt(gfx * gfx + gfy * gfy);
    Real ne = sqrt(gex * gex + gey * gey);
    if (nf <= tol || ne <= tol)
        throw domain_error("singular point: touching undecidable");
    Real cross = gfx * gey - gfy * gex;
    return abs(cross) <= tol * nf * ne;
}

} // namespace sdg
