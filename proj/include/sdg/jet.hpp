#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sdg/expr.hpp"
#include "sdg/weil.hpp"

namespace sdg {

/// A point with an infinitesimal displacement: the argument "x + d" of the
/// Taylor expansion axiom. Displacements share one algebra and have zero
/// augmentation.
template <typename S>
struct JetPoint {
    std::vector<S> base;
    std::vector<WeilValue<S>> displacement;

    JetPoint(std::vector<S> b, std::vector<WeilValue<S>> d)
        : base(std::move(b)), displacement(std::move(d)) {
        if (base.size() != displacement.size())
            throw usage_error("jet point base/displacement size mismatch");
        if (displacement.empty()) throw usage_error("jet point needs at least one coordinate");
        const WeilPtr& alg = displacement.front().algebra();
        for (const auto& d : displacement) {
            if (!alg->same_presentation(*d.algebra()))
                throw domain_error("jet point displacements use different algebras");
            if (!(d.augmentation() == S(0)))
                throw domain_error("jet point displacement has nonzero augmentation");
        }
    }

    const WeilPtr& algebra() const { return displacement.front().algebra(); }
};

/// Multiplicative inverse: defined when the augmentation is a unit; the
/// nilpotent part is folded in by a terminating geometric series.
template <typename S>
WeilValue<S> weil_inverse(const WeilValue<S>& u) {
    const S& a = u.augmentation();
    if (a == S(0)) throw domain_error("non-invertible denominator: zero augmentation");
    const WeilPtr& W = u.algebra();
    S inv_a = scalar_ops<S>::div(S(1), a);
    WeilValue<S> m = u.nil_part().scaled(S(0) - inv_a); // -n/a
    WeilValue<S> acc = WeilValue<S>::scalar(W, S(1));
    WeilValue<S> p = WeilValue<S>::scalar(W, S(1));
    for (int k = 1; k <= W->nil_bound(); ++k) {
        p = p * m;
        if (p.is_zero()) break;
        acc = acc + p;
    }
    return acc.scaled(inv_a);
}

namespace detail {

/// d^j/dx^j of exp, log, sin, cos at the point a.
template <typename S>
S elementary_derivative(Expr::Kind fn, const S& a, int j) {
    using ops = scalar_ops<S>;
    switch (fn) {
        case Expr::Kind::exp_fn: return ops::exp(a);
        case Expr::Kind::log_fn: {
            if (j == 0) return ops::log(a);
            // (-1)^(j-1) (j-1)! / a^j
            S num = S((j - 1) % 2 == 0 ? 1 : -1);
            for (int i = 2; i < j; ++i) num = num * S(i);
            return ops::div(num, ops::pow(a, j));
        }
        case Expr::Kind::sin_fn:
            switch (j % 4) {
                case 0: return ops::sin(a);
                case 1: return ops::cos(a);
                case 2: return S(0) - ops::sin(a);
                default: return S(0) - ops::cos(a);
            }
        case Expr::Kind::cos_fn:
            switch (j % 4) {
                case 0: return ops::cos(a);
                case 1: return S(0) - ops::sin(a);
                case 2: return S(0) - ops::cos(a);
                default: return ops::sin(a);
            }
        default: throw error("not an elementary function node");
    }
}

/// Apply an elementary function to a Weil point by the truncated series
/// sum_j f^(j)(a) n^j / j!, exact in the nilpotent coefficients.
template <typename S>
WeilValue<S> apply_elementary(Expr::Kind fn, const WeilValue<S>& u) {
    const WeilPtr& W = u.algebra();
    WeilValue<S> n = u.nil_part();
    WeilValue<S> p = WeilValue<S>::scalar(W, S(1));
    WeilValue<S> acc(W);
    S factorial(1);
    for (int j = 0; j <= W->nil_bound(); ++j) {
        if (j > 0) {
            factorial = factorial * S(j);
            p = p * n;
            if (p.is_zero()) break;
        }
        S coeff = scalar_ops<S>::div(elementary_derivative(fn, u.augmentation(), j), factorial);
        acc = acc + p.scaled(coeff);
    }
    return acc;
}

} // namespace detail

/// Truncated Taylor expansion of f at the jet point, reduced to basis
/// coordinates of the displacement algebra.
template <typename S>
WeilValue<S> taylor_lift(const Expr& f, const JetPoint<S>& p) {
    if (f.arity() > static_cast<int>(p.base.size()))
        throw usage_error("jet point has fewer coordinates than the expression arity");
    const WeilPtr& W = p.algebra();
    std::vector<WeilValue<S>> point;
    point.reserve(p.base.size());
    for (size_t i = 0; i < p.base.size(); ++i)
        point.push_back(WeilValue<S>::scalar(W, p.base[i]) + p.displacement[i]);

    std::function<WeilValue<S>(const Expr::Node&)> rec =
        [&](const Expr::Node& n) -> WeilValue<S> {
        switch (n.kind) {
            case Expr::Kind::constant:
                return WeilValue<S>::scalar(W, scalar_ops<S>::from_rational(n.value));
            case Expr::Kind::variable: return point[static_cast<size_t>(n.var)];
            case Expr::Kind::add: return rec(*n.a) + rec(*n.b);
            case Expr::Kind::sub: return rec(*n.a) - rec(*n.b);
            case Expr::Kind::mul: return rec(*n.a) * rec(*n.b);
            case Expr::Kind::div: return rec(*n.a) * weil_inverse(rec(*n.b));
            case Expr::Kind::pow: {
                WeilValue<S> base = rec(*n.a);
                if (n.exponent >= 0) return base.pow(n.exponent);
                return weil_inverse(base.pow(-n.exponent));
            }
            default:
                if constexpr (scalar_ops<S>::elementary) {
                    return detail::apply_elementary(n.kind, rec(*n.a));
                } else {
                    throw domain_error("transcendental function in exact mode");
                }
        }
    };
    return rec(*f.root());
}

/// Displacement vector that is zero except for the algebra generator in one
/// slot.
template <typename S>
JetPoint<S> jet_point_single(std::vector<S> base, int var, const WeilPtr& W) {
    std::vector<WeilValue<S>> disp(base.size(), WeilValue<S>(W));
    disp[static_cast<size_t>(var)] = WeilValue<S>::generator(W, 0);
    return JetPoint<S>(std::move(base), std::move(disp));
}

/// Displacement vector carrying the i-th generator in slot i.
template <typename S>
JetPoint<S> jet_point_generators(std::vector<S> base, const WeilPtr& W) {
    std::vector<WeilValue<S>> disp;
    disp.reserve(base.size());
    for (size_t i = 0; i < base.size(); ++i)
        disp.push_back(WeilValue<S>::generator(W, static_cast<int>(i)));
    return JetPoint<S>(std::move(base), std::move(disp));
}

/// First partial derivative via the D-coefficient of the lift.
template <typename S>
S derivative(const Expr& f, int var, std::vector<S> base) {
    if (var < 0 || var >= static_cast<int>(base.size()))
        throw usage_error("derivative variable out of range");
    WeilPtr D = weil_D();
    auto lift = taylor_lift(f, jet_point_single(std::move(base), var, D));
    return lift.coeff(D->basis_index(Monomial::var(0)));
}

template <typename S>
using MonomialMap = std::map<Monomial, S, GrlexLess>;

/// Taylor coefficients of f at `base` through total degree k, read off the
/// D_k(n) basis: the entry at monomial m is (d^m f)(base) / m!.
template <typename S>
MonomialMap<S> taylor_coefficients(const Expr& f, std::vector<S> base, int k) {
    if (k < 0) throw usage_error("negative Taylor degree");
    int n = static_cast<int>(base.size());
    if (n < 1) throw usage_error("empty base point");
    MonomialMap<S> out;
    if (k == 0) {
        out.emplace(Monomial::one(), f.eval(std::span<const S>(base)));
        return out;
    }
    WeilPtr W = weil_Dk(k, n);
    auto lift = taylor_lift(f, jet_point_generators(std::move(base), W));
    for (int i = 0; i < W->dim(); ++i) {
        if (lift.coeff(i) == S(0)) continue;
        out.emplace(W->basis()[static_cast<size_t>(i)], lift.coeff(i));
    }
    return out;
}

/// Exact-mode Taylor polynomial of degree <= k about `base` (in displacement
/// coordinates centered at 0).
Polynomial taylor_poly(const Expr& f, const std::vector<Rational>& base, int k);

/// Laplacian at a binary point, read off the D_L lift: twice the coefficient
/// of the basis monomial x1^2, since x2^2 folds onto x1^2 there.
template <typename S>
S laplacian(const Expr& f, std::vector<S> base) {
    if (f.arity() != 2 || base.size() != 2)
        throw usage_error("laplacian expects a binary function and a planar point");
    WeilPtr W = weil_DL();
    auto lift = taylor_lift(f, jet_point_generators(std::move(base), W));
    int i = W->basis_index(Monomial::var(0, 2));
    return S(2) * lift.coeff(i);
}

template <typename S>
struct KlCoefficients {
    std::vector<S> coeffs; // a, b_1, ..., b_n
    bool residual_ok;      // no components outside {1, x_1, ..., x_n}
};

/// Axiom-scheme coefficient extraction on D(n) at base 0.
template <typename S>
KlCoefficients<S> kl_coefficients(const Expr& f, int n) {
    if (n < 1) throw usage_error("kl_coefficients needs n >= 1");
    if (f.arity() > n) throw usage_error("expression arity exceeds n");
    WeilPtr W = weil_Dn(n);
    std::vector<S> base(static_cast<size_t>(n), S(0));
    auto lift = taylor_lift(f, jet_point_generators(std::move(base), W));
    KlCoefficients<S> out;
    out.coeffs.push_back(lift.augmentation());
    for (int v = 0; v < n; ++v) out.coeffs.push_back(lift.coeff(W->basis_index(Monomial::var(v))));
    out.residual_ok = true;
    for (int i = 0; i < W->dim(); ++i)
        if (W->basis()[static_cast<size_t>(i)].degree() >= 2 && !(lift.coeff(i) == S(0)))
            out.residual_ok = false;
    return out;
}

/// The cancellation principle "d*r = d*s for all d in D implies r = s",
/// decided as equality of the epsilon-coefficients of the two lifts.
/// Exact mode: r and s are unary (or constant) polynomial expressions.
bool cancel_d(const Expr& u, const Expr& v);

/// Proposition "M(0) = D(n)": the lift of alpha at the generic nilpotent
/// point differs from alpha(0) by a square-zero element.
bool monad_check(const Expr& alpha, const WeilPtr& W);

/// Smallest k >= 0 with (u - v)^(k+1) = 0, nullopt when u - v is not
/// nilpotent.
template <typename S>
std::optional<int> neighbour_order(const WeilValue<S>& u, const WeilValue<S>& v) {
    return nilpotency_order(u - v);
}

template <typename S>
std::optional<int> neighbour_order(const S& u, const S& v) {
    if (u == v) return 0;
    return std::nullopt; // nonzero scalars are not nilpotent
}

} // namespace sdg
