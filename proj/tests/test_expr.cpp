#include <doctest.h>

#include "sdg/expr.hpp"
#include "sdg/verify.hpp"

using namespace sdg;

TEST_CASE("parsing and printing round trips") {
    for (const char* text : {"x^2", "y-(x-t)^3", "1/2*x+3", "exp(x)*cos(y)", "x/(1+x^2)",
                             "sin(x)-1/6*x^3", "x1*x2-x3^2", "2*x^-2"}) {
        Expr e = Expr::parse(text);
        Expr back = Expr::parse(e.str(), e.arity());
        CHECK(e.str() == back.str());
    }
    CHECK(Expr::parse("1/2").constant_value() == rat(1, 2));
    CHECK(Expr::parse("y-(x-t)^3").arity() == 3);
    CHECK(Expr::parse("x^2", 3).arity() == 3);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(Expr::parse("x +"), usage_error);
    CHECK_THROWS_AS(Expr::parse("foo(x)"), usage_error);
    CHECK_THROWS_AS(Expr::parse("(x"), usage_error);
    CHECK_THROWS_AS(Expr::parse("x^y"), usage_error);
    CHECK_THROWS_AS(Expr::parse("x4", 3), usage_error); // exceeds declared arity
    CHECK_THROWS_AS(Expr::parse("1/0"), domain_error);
}

TEST_CASE("exact evaluation") {
    Expr f = Expr::parse("x^3-2*x*y+1/2", 2);
    std::vector<Rational> p{rat(2), rat(3)};
    CHECK(f.eval(p) == rat(-7, 2));
    CHECK_THROWS_AS(Expr::parse("exp(x)").eval(std::vector<Rational>{rat(1)}), domain_error);
    CHECK_THROWS_AS(Expr::parse("x/y", 2).eval(std::vector<Rational>{rat(1), rat(0)}),
                    domain_error);
    CHECK(Expr::parse("x^-2").eval(std::vector<Rational>{rat(2)}) == rat(1, 4));
}

TEST_CASE("numeric evaluation of transcendentals") {
    Expr f = Expr::parse("exp(x)*cos(y)", 2);
    std::vector<Real> p{Real(0), Real(0)};
    CHECK(f.eval(p) == Real(1));
    Expr g = Expr::parse("log(exp(x))");
    std::vector<Real> q{Real(rat(3, 7))};
    CHECK(abs(g.eval(q) - Real(rat(3, 7))) < Real::parse("1e-70"));
}

TEST_CASE("polynomial detection") {
    CHECK(Expr::parse("y-(x-t)^3").is_polynomial());
    CHECK(Expr::parse("x/2").is_polynomial());
    CHECK_FALSE(Expr::parse("sin(x)").is_polynomial());
    CHECK_FALSE(Expr::parse("1/x").is_polynomial());
    CHECK_FALSE(Expr::parse("x^-1").is_polynomial());
}

TEST_CASE("symbolic derivative via expression duals") {
    Expr f = Expr::parse("y-(x-t)^3");
    Expr ft = f.derivative(2);
    CHECK(ft.to_polynomial() == Expr::parse("3*(x-t)^2").to_polynomial());
    CHECK(Expr::parse("(x-t)^2+y^2-1").derivative(2).to_polynomial() ==
          Expr::parse("-2*(x-t)", 3).to_polynomial());
    // derivative of a t-free family folds to the literal zero
    Expr g = Expr::parse("x^2+y^2", 3).derivative(2);
    CHECK(g.is_constant());
    CHECK(g.constant_value() == 0);

    SUBCASE("numeric spot check against the closed form") {
        Expr h = Expr::parse("exp(x)*sin(x)");
        Expr dh = h.derivative(0);
        Expr expect = Expr::parse("exp(x)*(sin(x)+cos(x))");
        for (int i = -2; i <= 2; ++i) {
            std::vector<Real> p{Real(rat(i, 2))};
            CHECK(abs(dh.eval(p) - expect.eval(p)) < Real::parse("1e-70"));
        }
    }
}

TEST_CASE("substitution composes expressions") {
    Expr f = Expr::parse("x^2+1");
    Expr g = Expr::parse("sin(x)");
    Expr fg = f.substitute(0, g); // sin(x)^2 + 1
    std::vector<Real> p{Real(rat(1, 4))};
    Real s = sin(Real(rat(1, 4)));
    CHECK(abs(fg.eval(p) - (s * s + Real(1))) < Real::parse("1e-70"));
}
