#include "sdg/jet.hpp"

namespace sdg {

Polynomial taylor_poly(const Expr& f, const std::vector<Rational>& base, int k) {
    auto coeffs = taylor_coefficients<Rational>(f, base, k);
    Polynomial p(static_cast<int>(base.size()));
    for (const auto& [m, c] : coeffs) p.add_term(m, c);
    return p;
}

namespace {

// extend a univariate polynomial in x to the two-variable ring (x, d)
Polynomial widen_to_xd(const Polynomial& p) {
    Polynomial out(2);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c);
    return out;
}

} // namespace

bool cancel_d(const Expr& u, const Expr& v) {
    if (u.arity() > 1 || v.arity() > 1)
        throw usage_error("cancel_d expects unary or constant expressions");
    if (!u.is_polynomial() || !v.is_polynomial())
        throw domain_error("cancel_d requires polynomial expressions in exact mode");
    // Lift d*r and d*s through D in the d slot with the parameter symbolic:
    // work in Q[x, d]/(d^2) and compare the d-coefficients.
    RewriteSystem rules(2, {{Monomial::var(1, 2), Polynomial::zero(2)}});
    Polynomial d = Polynomial::variable(2, 1);
    auto eps_coefficient = [&](const Expr& f) {
        Polynomial lifted = rules.normal_form(d * widen_to_xd(f.to_polynomial()));
        auto by_power = lifted.coefficients_in(1);
        return by_power.size() > 1 ? by_power[1] : Polynomial::zero(2);
    };
    return eps_coefficient(u) == eps_coefficient(v);
}

bool monad_check(const Expr& alpha, const WeilPtr& W) {
    if (!alpha.is_polynomial())
        throw domain_error("monad_check requires a polynomial map in exact mode");
    if (alpha.arity() > W->nvars())
        throw usage_error("expression arity exceeds the algebra's variable count");
    std::vector<Rational> base(static_cast<size_t>(W->nvars()), Rational(0));
    auto lift = taylor_lift(alpha, jet_point_generators(std::move(base), W));
    WeilElement diff = lift.nil_part(); // alpha(point) - alpha(0)
    return (diff * diff).is_zero();
}

} // namespace sdg
