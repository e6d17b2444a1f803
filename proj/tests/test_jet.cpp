#include <doctest.h>

#include "sdg/jet.hpp"
#include "sdg/verify.hpp"

using namespace sdg;

namespace {

const Real kTol70 = Real::parse("1e-70");

} // namespace

TEST_CASE("taylor_lift examples") {
    // f(x) = x^2 at 1 + eps: 1 + 2 eps
    auto d = weil_D();
    auto lift = taylor_lift(Expr::parse("x^2"), jet_point_single<Rational>({rat(1)}, 0, d));
    CHECK(lift.augmentation() == 1);
    CHECK(lift.coeff(1) == 2);

    // exp at 0 on D_2: 1 + x + x^2/2
    auto d2 = weil_D2();
    auto e = taylor_lift(Expr::parse("exp(x)"), jet_point_single<Real>({Real(0)}, 0, d2));
    CHECK(e.coeff(0) == Real(1));
    CHECK(e.coeff(1) == Real(1));
    CHECK(e.coeff(2) == Real(rat(1, 2)));

    // x^3 of a square-zero displacement vanishes
    auto cube = taylor_lift(Expr::parse("x^3"), jet_point_single<Rational>({rat(0)}, 0, d));
    CHECK(cube.is_zero());
}

TEST_CASE("lift respects division by units and rejects nilpotent denominators") {
    auto d = weil_D();
    // 1/(1+eps) = 1 - eps
    auto inv = taylor_lift(Expr::parse("1/(1+x)"), jet_point_single<Rational>({rat(0)}, 0, d));
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(1) == -1);
    // higher order: the geometric series 1 - x + x^2 - x^3 on D_3(1)
    auto d3 = weil_Dk(3, 1);
    auto geo = taylor_lift(Expr::parse("1/(1+x)"), jet_point_single<Rational>({rat(0)}, 0, d3));
    for (int k = 0; k <= 3; ++k)
        CHECK(geo.coeff(d3->basis_index(k == 0 ? Monomial::one() : Monomial::var(0, k))) ==
              rat(k % 2 == 0 ? 1 : -1));
    // u * (1/u) = 1 for random units
    std::uint64_t state = 23;
    for (int trial = 0; trial < 30; ++trial) {
        WeilElement u(d3);
        u.coeff(0) = rat(1 + static_cast<long>(rng_next(state, 5)));
        for (int i = 1; i < d3->dim(); ++i) u.coeff(i) = random_rational(state, 4, 3);
        CHECK(u * weil_inverse(u) == WeilElement::scalar(d3, rat(1)));
    }
    // 1/eps is undefined
    CHECK_THROWS_WITH_AS(
        taylor_lift(Expr::parse("1/x"), jet_point_single<Rational>({rat(0)}, 0, d)),
        doctest::Contains("non-invertible"), domain_error);
}

TEST_CASE("jet points enforce their invariants") {
    auto d = weil_D();
    // displacement with nonzero augmentation is rejected
    std::vector<WeilValue<Rational>> bad{WeilElement::scalar(d, rat(1))};
    CHECK_THROWS_AS(JetPoint<Rational>({rat(0)}, bad), domain_error);
    // mixed algebras are rejected
    std::vector<WeilValue<Rational>> mixed{WeilElement::generator(d, 0),
                                           WeilElement::generator(weil_Dn(2), 0)};
    CHECK_THROWS_AS(JetPoint<Rational>({rat(0), rat(0)}, mixed), domain_error);
}

TEST_CASE("augmentation of a lift is evaluation at the base point") {
    // setting d = 0 recovers f(x)
    std::uint64_t state = 19;
    for (auto w : {weil_Dn(2), weil_DL()}) {
        for (int trial = 0; trial < 20; ++trial) {
            Expr f = random_poly_expr(state, 2, 4);
            std::vector<Rational> base{random_rational(state, 3, 2),
                                       random_rational(state, 3, 2)};
            auto lift = taylor_lift(f, jet_point_generators<Rational>(base, w));
            CHECK(lift.augmentation() == f.eval(base));
        }
    }
}

TEST_CASE("derivative via the D coefficient") {
    CHECK(derivative<Rational>(Expr::parse("x^3"), 0, {rat(2)}) == 12);
    CHECK(abs(derivative<Real>(Expr::parse("exp(x)"), 0, {Real(0)}) - Real(1)) < kTol70);
    // partials: d/dy (x^2 y + y^3) at (2, 1) = 4 + 3 = 7
    CHECK(derivative<Rational>(Expr::parse("x^2*y+y^3", 2), 1, {rat(2), rat(1)}) == 7);
}

TEST_CASE("derivative oracle against central differences") {
    auto r = verify_derivative(40, 20260808);
    CHECK(r.cases == 40);
    CHECK(r.failures == 0);

    SUBCASE("random products against the step-1e-30 oracle") {
        std::uint64_t state = 29;
        Real h = Real::parse("1e-30");
        Real tol = Real::parse("1e-20");
        for (int trial = 0; trial < 10; ++trial) {
            Real ad(0), fd(0);
            try {
                Expr f = random_smooth_expr(state, 1, 3) * random_smooth_expr(state, 1, 3);
                Real x0 = Real(rat(1, 2) + rat(static_cast<long>(rng_next(state, 4)), 4));
                ad = derivative<Real>(f, 0, {x0});
                fd = (f.eval(std::vector<Real>{x0 + h}) - f.eval(std::vector<Real>{x0 - h})) /
                     (Real(2) * h);
            } catch (const domain_error&) {
                continue;
            }
            Real denom = abs(ad) < Real(1) ? Real(1) : abs(ad);
            CHECK(abs(fd - ad) / denom <= tol);
        }
    }
}

TEST_CASE("numeric lift hits function domain errors") {
    auto d = weil_D();
    CHECK_THROWS_AS(taylor_lift(Expr::parse("log(x)"), jet_point_single<Real>({Real(-1)}, 0, d)),
                    domain_error);
    CHECK_THROWS_AS(taylor_lift(Expr::parse("log(x)"), jet_point_single<Real>({Real(0)}, 0, d)),
                    domain_error);
}

TEST_CASE("taylor_poly examples") {
    auto exp_t2 = taylor_coefficients<Real>(Expr::parse("exp(x)"), {Real(0)}, 2);
    CHECK(exp_t2.at(Monomial::one()) == Real(1));
    CHECK(exp_t2.at(Monomial::var(0)) == Real(1));
    CHECK(exp_t2.at(Monomial::var(0, 2)) == Real(rat(1, 2)));

    // a polynomial is its own Taylor polynomial
    Polynomial xy = taylor_poly(Expr::parse("x*y", 2), {rat(0), rat(0)}, 2);
    CHECK(xy == Expr::parse("x*y", 2).to_polynomial());

    // sin to degree 3: x - x^3/6
    auto sin_t3 = taylor_coefficients<Real>(Expr::parse("sin(x)"), {Real(0)}, 3);
    CHECK(abs(sin_t3.at(Monomial::var(0)) - Real(1)) < kTol70);
    CHECK(abs(sin_t3.at(Monomial::var(0, 3)) + Real(rat(1, 6))) < kTol70);
    CHECK(sin_t3.find(Monomial::var(0, 2)) == sin_t3.end());

    SUBCASE("degree k+1 truncates to degree k") {
        std::uint64_t state = 31;
        for (int trial = 0; trial < 25; ++trial) {
            Expr f = random_poly_expr(state, 2, 4);
            Polynomial pk = taylor_poly(f, {rat(1, 2), rat(-1, 3)}, 2);
            Polynomial pk1 = taylor_poly(f, {rat(1, 2), rat(-1, 3)}, 3);
            Polynomial truncated(2);
            for (const auto& [m, c] : pk1.terms())
                if (m.degree() <= 2) truncated.add_term(m, c);
            CHECK(pk == truncated);
        }
    }
}

TEST_CASE("laplacian via D_L") {
    CHECK(laplacian<Rational>(Expr::parse("x^2+y^2", 2), {rat(0), rat(0)}) == 4);
    CHECK(laplacian<Rational>(Expr::parse("x^2-y^2", 2), {rat(0), rat(0)}) == 0);
    Real harm = laplacian<Real>(Expr::parse("exp(x)*cos(y)", 2), {Real(0), Real(0)});
    CHECK(abs(harm) < kTol70);

    SUBCASE("second differences agree for the harmonic example") {
        Expr f = Expr::parse("exp(x)*cos(y)", 2);
        Real h = Real::parse("1e-20");
        auto at = [&](Real x, Real y) { return f.eval(std::vector<Real>{x, y}); };
        Real fxx = (at(h, Real(0)) - Real(2) * at(Real(0), Real(0)) + at(-h, Real(0))) / (h * h);
        Real fyy = (at(Real(0), h) - Real(2) * at(Real(0), Real(0)) + at(Real(0), -h)) / (h * h);
        CHECK(abs(fxx + fyy - harm) < Real::parse("1e-25"));
    }

    SUBCASE("laplacian equals the Hessian trace from taylor_poly, exact") {
        std::uint64_t state = 37;
        for (int trial = 0; trial < 25; ++trial) {
            Expr f = random_poly_expr(state, 2, 4);
            std::vector<Rational> base{random_rational(state, 3, 2), random_rational(state, 3, 2)};
            Polynomial t2 = taylor_poly(f, base, 2);
            Rational trace = 2 * t2.coefficient(Monomial::var(0, 2)) +
                             2 * t2.coefficient(Monomial::var(1, 2));
            CHECK(laplacian<Rational>(f, base) == trace);
        }
    }
}

TEST_CASE("kl coefficient extraction on D(n)") {
    auto c7 = kl_coefficients<Rational>(Expr::parse("7", 2), 2);
    CHECK(c7.coeffs == std::vector<Rational>{rat(7), rat(0), rat(0)});
    CHECK(c7.residual_ok);
    auto lin = kl_coefficients<Rational>(Expr::parse("x+3*y", 2), 2);
    CHECK(lin.coeffs == std::vector<Rational>{rat(0), rat(1), rat(3)});
    auto prod = kl_coefficients<Rational>(Expr::parse("x*y", 2), 2);
    CHECK(prod.coeffs == std::vector<Rational>{rat(0), rat(0), rat(0)});
    CHECK(prod.residual_ok);

    SUBCASE("axiom 1 with parameters: coefficients are functions of i") {
        // f(i, d) = (i^2 + 1) + d * (3i - 2), lifted in d with i symbolic
        Expr f = Expr::parse("(x^2+1)+y*(3*x-2)", 2);
        Expr a_of_i = f.substitute(1, Expr::constant(2, rat(0)));
        Expr b_of_i = f.derivative(1);
        std::uint64_t state = 41;
        for (int trial = 0; trial < 20; ++trial) {
            Rational i0 = random_rational(state, 6, 3);
            // per-point extraction: freeze i = i0, read (a, b) off D(1)
            Expr fd = f.substitute(0, Expr::constant(2, i0));
            auto kl = kl_coefficients<Rational>(fd, 2);
            CHECK(kl.coeffs[0] == a_of_i.eval(std::vector<Rational>{i0, rat(0)}));
            CHECK(kl.coeffs[2] == b_of_i.eval(std::vector<Rational>{i0, rat(0)}));
        }
    }
}

TEST_CASE("cancellation principle") {
    CHECK(cancel_d(Expr::parse("3*x+1"), Expr::parse("3*x+1")));
    // the two-lines Principle: equal slopes iff cancellable
    CHECK(cancel_d(Expr::constant(1, rat(5)), Expr::constant(1, rat(5))));
    CHECK_FALSE(cancel_d(Expr::constant(1, rat(1)), Expr::constant(1, rat(2))));
    auto r = verify_cancel(100, 20260808);
    CHECK(r.failures == 0);
}

TEST_CASE("neighbour order") {
    auto d = weil_D();
    CHECK(neighbour_order(WeilElement::generator(d, 0), WeilElement(d)) == 1);
    auto d2 = weil_D2();
    CHECK(neighbour_order(WeilElement::generator(d2, 0), WeilElement(d2)) == 2);
    WeilElement u = WeilElement::scalar(d, rat(2));
    CHECK(neighbour_order(u, u) == 0);
    CHECK_FALSE(neighbour_order(WeilElement::scalar(d, rat(1)), WeilElement(d)).has_value());
    CHECK(neighbour_order(rat(1, 2), rat(1, 2)) == 0);
    CHECK_FALSE(neighbour_order(rat(1), rat(2)).has_value());
}

TEST_CASE("chain rule, exact and numeric") {
    std::uint64_t state = 43;
    for (int trial = 0; trial < 30; ++trial) {
        Expr f = random_poly_expr(state, 1, 3);
        Expr g = random_poly_expr(state, 1, 3);
        Expr fg = f.substitute(0, g);
        Rational x0 = random_rational(state, 3, 2);
        Rational g0 = g.eval(std::vector<Rational>{x0});
        Rational lhs = derivative<Rational>(fg, 0, {x0});
        Rational rhs =
            derivative<Rational>(f, 0, {g0}) * derivative<Rational>(g, 0, {x0});
        CHECK(lhs == rhs);
    }
    // numeric composite with transcendentals
    Expr f = Expr::parse("exp(x)");
    Expr g = Expr::parse("sin(x)");
    Expr fg = f.substitute(0, g);
    Real x0 = Real(rat(2, 3));
    Real lhs = derivative<Real>(fg, 0, {x0});
    Real rhs = derivative<Real>(f, 0, {sin(x0)}) * derivative<Real>(g, 0, {x0});
    CHECK(abs(lhs - rhs) < kTol70);
    // and against central differences at step 1e-30
    Real h = Real::parse("1e-30");
    Real fd = (fg.eval(std::vector<Real>{x0 + h}) - fg.eval(std::vector<Real>{x0 - h})) /
              (Real(2) * h);
    CHECK(abs(fd - lhs) / abs(lhs) <= Real::parse("1e-20"));
}

TEST_CASE("lift is linear and multiplicative, randomized exact") {
    std::uint64_t state = 47;
    for (auto w : {weil_Dn(2), weil_DL(), weil_Dk(2, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            Expr f = random_poly_expr(state, 2, 3);
            Expr g = random_poly_expr(state, 2, 3);
            std::vector<Rational> base{random_rational(state, 2, 2),
                                       random_rational(state, 2, 2)};
            auto pt = jet_point_generators<Rational>(base, w);
            auto lf = taylor_lift(f, pt);
            auto lg = taylor_lift(g, pt);
            CHECK(taylor_lift(f + g, pt) == lf + lg);
            CHECK(taylor_lift(f * g, pt) == lf * lg);
        }
    }
}
