#include <doctest.h>

#include "sdg/expr.hpp"
#include "sdg/resultant.hpp"
#include "sdg/rewrite.hpp"
#include "sdg/verify.hpp"

using namespace sdg;

namespace {

Polynomial P(const std::string& text, int nvars) {
    return Expr::parse(text, nvars).to_polynomial();
}

// Independent determinant oracle: plain Laplace cofactor expansion, no
// elimination. Only used to cross-check the Bareiss path.
Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m, int nvars) {
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(nvars, rat(1));
    if (n == 1) return m[0][0];
    Polynomial acc(nvars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_cofactor(minor, nvars);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(rat_parse("3/6") == rat(1, 2));
    CHECK(rat_parse("-2/4") == rat(-1, 2));
    CHECK(rat_parse("7") == rat(7));
    CHECK(rat_str(rat(-3, 9)) == "-1/3");
    CHECK(rat_str(rat(0, 5)) == "0");
    CHECK_THROWS_AS(rat_parse("1/0"), domain_error);
}

TEST_CASE("real scalar basics") {
    Real e1 = exp(Real(1));
    CHECK(e1.str().substr(0, 20) == "2.718281828459045235");
    Real x = Real::parse("1e-30");
    CHECK(x.sign() > 0);
    CHECK(x < Real::parse("1e-29"));
    Real s = sin(Real(rat(1, 3))), c = cos(Real(rat(1, 3)));
    CHECK(abs(s * s + c * c - Real(1)) < Real::parse("1e-70"));
    CHECK(abs(log(exp(Real(rat(5, 7)))) - Real(rat(5, 7))) < Real::parse("1e-70"));
    CHECK_THROWS_AS(log(Real(-1)), domain_error);
    CHECK_THROWS_AS(Real(1) / Real(0), domain_error);
}

TEST_CASE("polynomial arithmetic examples") {
    CHECK(P("(x+1)*(x-1)", 1) == P("x^2-1", 1));
    Polynomial p = P("x^2+3*y", 2);
    CHECK(p + Polynomial::zero(2) == p);
    CHECK(P("(x1+x2)^2", 2) == P("x1^2+2*x1*x2+x2^2", 2));
}

TEST_CASE("ring axioms, randomized") {
    auto r = verify_ring(1000, 20260808);
    CHECK(r.cases == 1000);
    CHECK(r.failures == 0);
}

TEST_CASE("grlex order and display") {
    CHECK(grlex_less(Monomial::var(0, 2), Monomial::var(1, 2))); // x^2 < y^2
    CHECK(grlex_less(Monomial::var(1), Monomial::var(0, 2)));    // y < x^2 by degree
    CHECK(P("27*y^2", 2).str() == "27*y^2");
    CHECK(P("4*y-4*x^2", 2).str() == "-4*x^2+4*y");
    CHECK(Polynomial::zero(2).str() == "0");
    CHECK(P("x1*x4^2", 4).str() == "x1*x4^2");
}

TEST_CASE("polynomial eval, derivative, substitute") {
    Polynomial p = P("x^3-2*x*y+1/2", 2);
    std::vector<Rational> at{rat(2), rat(3)};
    CHECK(p.eval<Rational>(at) == rat(8) - rat(12) + rat(1, 2));
    CHECK(p.derivative(0) == P("3*x^2-2*y", 2));
    CHECK(p.derivative(1) == P("-2*x", 2));
    Polynomial shifted = p.substitute(0, P("x+1", 2));
    CHECK(shifted == P("(x+1)^3-2*(x+1)*y+1/2", 2));
}

TEST_CASE("normal forms in quotient presentations") {
    // D(2): all pairwise products vanish
    RewriteSystem d2(2, {{Monomial::var(0, 2), Polynomial::zero(2)},
                         {Monomial::var(1, 2), Polynomial::zero(2)},
                         {Monomial::var(0) * Monomial::var(1), Polynomial::zero(2)}});
    CHECK(d2.normal_form(P("x1*x2", 2)).is_zero());
    CHECK(d2.normal_form(P("x1+3", 2)) == P("x1+3", 2));

    // D_L with the derived relation x1^3 = 0
    RewriteSystem dl(2, {{Monomial::var(1, 2), Polynomial::term(2, Monomial::var(0, 2), rat(1))},
                         {Monomial::var(0) * Monomial::var(1), Polynomial::zero(2)},
                         {Monomial::var(0, 3), Polynomial::zero(2)}});
    CHECK(dl.normal_form(P("x2^2", 2)) == P("x1^2", 2));
    CHECK(dl.normal_form(P("x1^2+x2^2", 2)) == P("2*x1^2", 2));

    SUBCASE("normal_form is idempotent and a ring map onto the quotient") {
        std::uint64_t state = 99;
        for (int i = 0; i < 50; ++i) {
            Polynomial p =
                P("x1^2*x2+x2^3-x1", 2) * random_rational(state, 5, 3);
            Polynomial q = P("x2^2-x1*x2+2", 2) * random_rational(state, 5, 3);
            CHECK(dl.normal_form(dl.normal_form(p)) == dl.normal_form(p));
            CHECK(dl.normal_form(p * q) == dl.normal_form(dl.normal_form(p) * dl.normal_form(q)));
        }
    }
}

TEST_CASE("confluence is required at construction") {
    // D_L without the derived rule x1^3 -> 0: critical pair x1*x2^2 fails
    CHECK_THROWS_AS(
        RewriteSystem(2, {{Monomial::var(1, 2), Polynomial::term(2, Monomial::var(0, 2), rat(1))},
                          {Monomial::var(0) * Monomial::var(1), Polynomial::zero(2)}}),
        domain_error);
    // a rule must decrease the order
    CHECK_THROWS_AS(
        RewriteSystem(2, {{Monomial::var(0, 2), Polynomial::term(2, Monomial::var(1, 2), rat(1))}}),
        domain_error);
    // right-hand sides are 0 or a plain monomial
    CHECK_THROWS_AS(RewriteSystem(1, {{Monomial::var(0, 2), P("2*x", 1)}}), domain_error);
}

TEST_CASE("resultant: two lines") {
    // Res_t(t - a, t - b) = a - b, with a = x, b = y
    Polynomial p = P("t-x", 3), q = P("t-y", 3);
    CHECK(resultant(p, q, 2) == P("x-y", 3));
}

TEST_CASE("resultant: parabola tangent family") {
    Polynomial F = P("y-2*t*x+t^2", 3);
    Polynomial Ft = P("2*t-2*x", 3);
    Polynomial res = resultant(F, Ft, 2);
    Polynomial oracle = det_cofactor(sylvester_matrix(F, Ft, 2), 3);
    CHECK(res == oracle);
    CHECK(res == P("4*y-4*x^2", 3));
}

TEST_CASE("resultant: Courant family") {
    Polynomial F = P("y-(x-t)^3", 3);
    Polynomial Ft = P("3*(x-t)^2", 3);
    Polynomial res = resultant(F, Ft, 2);
    Polynomial oracle = det_cofactor(sylvester_matrix(F, Ft, 2), 3);
    CHECK(res == oracle);
    CHECK(res == P("27*y^2", 3));
}

TEST_CASE("resultant: unit circles along the x-axis") {
    Polynomial F = P("(x-t)^2+y^2-1", 3);
    Polynomial Ft = P("-2*(x-t)", 3);
    Polynomial res = resultant(F, Ft, 2);
    CHECK(res == det_cofactor(sylvester_matrix(F, Ft, 2), 3));
    CHECK(res == P("4*y^2-4", 3));
}

TEST_CASE("resultant vanishes on a shared factor") {
    Polynomial p = P("(t-x)*(t+x+y)", 3);
    Polynomial q = P("(t-x)*(t-y)", 3);
    CHECK(resultant(p, q, 2).is_zero());

    SUBCASE("randomized common factors") {
        std::uint64_t state = 271828;
        for (int trial = 0; trial < 15; ++trial) {
            // common = t - (random in x, y); cofactors of positive t-degree
            Polynomial common = P("t", 3);
            common.add_term(Monomial::var(0), random_rational(state, 3, 2));
            common.add_term(Monomial::var(1), random_rational(state, 3, 2));
            common.add_term(Monomial::one(), random_rational(state, 3, 2));
            Polynomial cof_p = P("t", 3);
            cof_p.add_term(Monomial::one(), random_rational(state, 3, 2));
            Polynomial cof_q = P("t^2", 3);
            cof_q.add_term(Monomial::var(1), random_rational(state, 3, 2));
            CHECK(resultant(common * cof_p, common * cof_q, 2).is_zero());
        }
    }
}

TEST_CASE("resultant rejects degree-zero input") {
    CHECK_THROWS_WITH_AS(resultant(P("x+1", 3), P("t", 3), 2), doctest::Contains("nothing"),
                         domain_error);
}

TEST_CASE("random Bareiss determinants match cofactor expansion") {
    std::uint64_t state = 4242;
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + rng_next(state, 3);
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(2)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Polynomial cell(2);
                cell.add_term(Monomial::one(), random_rational(state, 3, 2));
                if (rng_next(state, 2))
                    cell.add_term(Monomial::var(static_cast<int>(rng_next(state, 2))),
                                  random_rational(state, 2, 1));
                m[i][j] = cell;
            }
        CHECK(poly_det(m, 2) == det_cofactor(m, 2));
    }
}

TEST_CASE("squarefree reduction") {
    CHECK(squarefree_part(P("27*y^2", 2)) == P("27*y", 2));
    CHECK(squarefree_part(P("4*y-4*x^2", 2)) == P("4*y-4*x^2", 2));
    CHECK(squarefree_part(P("3*(y-x^2)^2", 2)) == P("3*x^2-3*y", 2)); // gcd is monic, sign follows the leading coefficient
    CHECK(squarefree_part(P("x^2*y^3", 2)) == P("x*y", 2));
}
