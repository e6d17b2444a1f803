#include <doctest.h>

#include "sdg/jet.hpp"
#include "sdg/verify.hpp"
#include "sdg/weil.hpp"

using namespace sdg;

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

WeilElement random_element(std::uint64_t& state, const WeilPtr& w, bool zero_aug = false) {
    WeilElement u(w);
    for (int i = zero_aug ? 1 : 0; i < w->dim(); ++i) u.coeff(i) = random_rational(state, 4, 3);
    return u;
}

} // namespace

TEST_CASE("named families have the right dimensions") {
    CHECK(weil_D()->dim() == 2);
    CHECK(weil_D()->basis()[0].is_one());
    CHECK(weil_D()->order() == 1);
    for (int n = 1; n <= 4; ++n) CHECK(weil_Dn(n)->dim() == n + 1);
    for (int k = 1; k <= 4; ++k) CHECK(weil_Dk(k, 1)->dim() == k + 1);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(weil_Dk(k, n)->dim() == binom(n + k, k));
    CHECK(weil_DL()->dim() == 4);
    CHECK(weil_D2()->dim() == 3);
    CHECK(weil_trivial()->dim() == 1);
}

TEST_CASE("D_L basis is 1, x1, x2, x1^2") {
    auto dl = weil_DL();
    REQUIRE(dl->dim() == 4);
    CHECK(dl->basis()[0] == Monomial::one());
    CHECK(dl->basis()[1] == Monomial::var(0));
    CHECK(dl->basis()[2] == Monomial::var(1));
    CHECK(dl->basis()[3] == Monomial::var(0, 2));
}

TEST_CASE("D_L sits between D(2) and D_2(2)") {
    auto dl = weil_DL();
    // every degree-3 monomial vanishes in D_L, so the order-2 laws hold
    for (int a = 0; a <= 3; ++a) {
        Monomial m = Monomial::var(0, a) * Monomial::var(1, 3 - a);
        CHECK_FALSE(dl->rules().reduce_monomial(m).has_value());
    }
    // the D(2) laws do not all hold: x1^2 survives in D_L
    CHECK(dl->rules().reduce_monomial(Monomial::var(0, 2)).has_value());
}

TEST_CASE("element arithmetic in D") {
    auto d = weil_D();
    WeilElement eps = WeilElement::generator(d, 0);
    CHECK((eps * eps).is_zero());
    WeilElement u = WeilElement::scalar(d, rat(3)) + eps.scaled(rat(5)); // 3 + 5e
    CHECK(u.augmentation() == rat(3));
    CHECK((WeilElement::scalar(d, rat(1)) * u) == u);
    // (1+e)^2 = 1+2e
    WeilElement one_eps = WeilElement::scalar(d, rat(1)) + eps;
    CHECK(one_eps.pow(2) == WeilElement::scalar(d, rat(1)) + eps.scaled(rat(2)));
}

TEST_CASE("pairwise products vanish in D(2)") {
    auto d2 = weil_Dn(2);
    WeilElement x1 = WeilElement::generator(d2, 0);
    WeilElement x2 = WeilElement::generator(d2, 1);
    CHECK((x1 * x2).is_zero());
    CHECK((x1 * x1).is_zero());
}

TEST_CASE("tensor products") {
    auto dd = weil_tensor(weil_D(), weil_D());
    CHECK(dd->dim() == 4);
    CHECK(dd->nvars() == 2);
    CHECK(weil_tensor(weil_D(), weil_trivial())->dim() == 2);
    CHECK(weil_tensor(weil_Dn(2), weil_D())->dim() == 6);
    CHECK(weil_tensor(weil_D(), weil_Dn(2))->dim() == 6);
    for (auto a : {weil_D(), weil_Dn(3), weil_DL()})
        for (auto b : {weil_D(), weil_D2()})
            CHECK(weil_tensor(a, b)->dim() == a->dim() * b->dim());

    SUBCASE("the tensor square of D separates epsilon_1 * epsilon_2") {
        WeilElement e1 = WeilElement::generator(dd, 0);
        WeilElement e2 = WeilElement::generator(dd, 1);
        CHECK_FALSE((e1 * e2).is_zero());
        // non-transitivity witness: (e1+e2)^2 = 2 e1 e2 != 0
        WeilElement s = e1 + e2;
        CHECK((s * s) == (e1 * e2).scaled(rat(2)));
        CHECK_FALSE((s * s).is_zero());
        // while inside D(2) the same square is 0
        auto d2 = weil_Dn(2);
        WeilElement f1 = WeilElement::generator(d2, 0);
        WeilElement f2 = WeilElement::generator(d2, 1);
        CHECK(((f1 + f2) * (f1 + f2)).is_zero());
    }
}

TEST_CASE("augmentation is the constant-term ring map") {
    auto dd = weil_tensor(weil_D(), weil_D());
    WeilElement e1e2 = WeilElement::generator(dd, 0) * WeilElement::generator(dd, 1);
    CHECK(e1e2.augmentation() == 0);
    std::uint64_t state = 7;
    for (int i = 0; i < 100; ++i) {
        WeilElement u = random_element(state, dd);
        WeilElement v = random_element(state, dd);
        CHECK((u * v).augmentation() == u.augmentation() * v.augmentation());
        CHECK((u + v).augmentation() == u.augmentation() + v.augmentation());
    }
}

TEST_CASE("commutative ring axioms for elements, randomized") {
    std::uint64_t state = 11;
    auto w = weil_DL();
    for (int i = 0; i < 200; ++i) {
        WeilElement a = random_element(state, w);
        WeilElement b = random_element(state, w);
        WeilElement c = random_element(state, w);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("augmentation-zero elements form an ideal of nilpotents") {
    std::uint64_t state = 13;
    for (auto w : {weil_Dn(3), weil_DL(), weil_Dk(3, 2)}) {
        for (const auto& m : w->basis()) {
            if (m.is_one()) continue;
            WeilElement u(w);
            u.coeff(w->basis_index(m)) = rat(1);
            CHECK(nilpotency_order(u).has_value());
        }
        for (int i = 0; i < 50; ++i) {
            WeilElement u = random_element(state, w, true);
            WeilElement v = random_element(state, w, true);
            CHECK((u + v).augmentation() == 0);
            CHECK((u * v).augmentation() == 0);
            CHECK(nilpotency_order(u + v).has_value());
            CHECK(nilpotency_order(u * random_element(state, w)).has_value());
        }
    }
}

TEST_CASE("nilpotency orders") {
    auto d = weil_D();
    CHECK(nilpotency_order(WeilElement::generator(d, 0)) == 1);
    auto d2 = weil_D2();
    CHECK(nilpotency_order(WeilElement::generator(d2, 0)) == 2);
    WeilElement unit = WeilElement::scalar(d, rat(1)) + WeilElement::generator(d, 0);
    CHECK_FALSE(nilpotency_order(unit).has_value());
    CHECK(nilpotency_order(WeilElement(d)) == 0);
}

TEST_CASE("R_(1) = R x D at the element level") {
    // lifting a polynomial f along y = x + eps gives f(x) + eps f'(x):
    // check in Q[x, eps]/(eps^2)
    RewriteSystem rules(2, {{Monomial::var(1, 2), Polynomial::zero(2)}});
    std::uint64_t state = 17;
    for (int trial = 0; trial < 40; ++trial) {
        Expr fe = random_poly_expr(state, 1, 4);
        Polynomial f = fe.to_polynomial();
        Polynomial f2(2);
        for (const auto& [m, c] : f.terms()) f2.add_term(m, c); // f(x) in Q[x,eps]
        Polynomial x_plus_eps = Expr::parse("x1+x2", 2).to_polynomial();
        Polynomial lifted = rules.normal_form(f2.substitute(0, x_plus_eps));
        Polynomial fprime = f.derivative(0);
        Polynomial fprime2(2);
        for (const auto& [m, c] : fprime.terms()) fprime2.add_term(m, c);
        CHECK(lifted == f2 + Polynomial::variable(2, 1) * fprime2);
    }
}

TEST_CASE("building rejects non-Weil presentations") {
    // x1 -> x1 is not even a rule; x1^2 -> x1 makes x1 idempotent, not nilpotent
    CHECK_THROWS_WITH_AS(
        weil_build(1, {{Monomial::var(0, 2), Polynomial::term(1, Monomial::var(0), rat(1))}}),
        doctest::Contains("not a Weil algebra"), domain_error);
    // no relation at all: infinite-dimensional
    CHECK_THROWS_WITH_AS(weil_build(1, {}), doctest::Contains("finite"), domain_error);
    // polynomial ring in 2 vars with only one variable killed
    CHECK_THROWS_AS(weil_build(2, {{Monomial::var(0, 2), Polynomial::zero(2)}}), domain_error);
}

TEST_CASE("algebra spec parsing") {
    CHECK(weil_parse("D")->dim() == 2);
    CHECK(weil_parse("D(3)")->dim() == 4);
    CHECK(weil_parse("Dk(2,2)")->dim() == 6);
    CHECK(weil_parse("DL")->dim() == 4);
    CHECK(weil_parse("D2")->dim() == 3);
    auto custom = weil_parse("n=2 rels=\"x1^2=0; x2^2=0; x1*x2=0\"");
    CHECK(custom->dim() == 3);
    CHECK(custom->same_presentation(*weil_Dn(2)));
    // relation given in the increasing direction is re-oriented
    auto dl = weil_parse("n=2 rels=\"x1^2=x2^2; x1*x2=0; x1^3=0\"");
    CHECK(dl->dim() == 4);
    CHECK_THROWS_AS(weil_parse("Dq(1)"), usage_error);
}

TEST_CASE("element operations reject algebra mismatches") {
    WeilElement a = WeilElement::generator(weil_D(), 0);
    WeilElement b = WeilElement::generator(weil_Dn(2), 0);
    CHECK_THROWS_AS(a + b, domain_error);
    CHECK_THROWS_AS(a * b, domain_error);
    // structurally equal presentations interoperate even as distinct objects
    WeilElement c = WeilElement::generator(weil_D(), 0);
    CHECK((a * c).is_zero());
}

TEST_CASE("monad check on D(n)") {
    CHECK(monad_check(Expr::parse("x+y", 2), weil_Dn(2)));
    CHECK(monad_check(Expr::parse("7", 2), weil_Dn(2)));
    CHECK(monad_check(Expr::parse("x*y", 2), weil_Dn(2)));
    auto r = verify_monad(100, 20260808);
    CHECK(r.failures == 0);
}
