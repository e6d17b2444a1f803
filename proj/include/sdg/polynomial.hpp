#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdg/rational.hpp"

namespace sdg {

/// Power product of variables x1..xn, stored sparsely as (index, exponent)
/// pairs sorted by index. No zero exponents are kept.
class Monomial {
  public:
    Monomial() = default;

    static Monomial one() { return {}; }
    static Monomial var(int index, int exponent = 1);

    int degree() const;
    int exponent(int var) const;
    bool is_one() const { return exps_.empty(); }
    int max_var() const { return exps_.empty() ? -1 : exps_.back().first; }

    Monomial operator*(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    /// Exact quotient; nullopt when not divisible.
    std::optional<Monomial> divide(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Shift every variable index by `offset` (tensor-product renaming).
    Monomial shifted(int offset) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::pair<int, int>>& factors() const { return exps_; }

    std::string str(const std::function<std::string(int)>& namer) const;

  private:
    std::vector<std::pair<int, int>> exps_;
};

/// Graded lexicographic order: lower total degree first; ties broken
/// lexicographically with higher variable index more significant. This makes
/// x2^2 > x1^2, so a rule x2^2 -> x1^2 rewrites downward.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

/// Variable namer used for display: x,y,t when nvars <= 3, else x1..xn.
std::function<std::string(int)> default_namer(int nvars);

/// Sparse multivariate polynomial over the rationals, in canonical form:
/// no zero coefficients, terms ordered by grlex.
class Polynomial {
  public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial term(int nvars, const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the monomial 1).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    int degree() const;
    int degree_in(int var) const;
    size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Coefficient polynomials with respect to `var`, ascending in power;
    /// result[k] does not mention `var`. Size is degree_in(var)+1 (empty for 0).
    std::vector<Polynomial> coefficients_in(int var) const;

    Polynomial derivative(int var) const;
    /// Replace `var` by `value` (a polynomial over the same variable set).
    Polynomial substitute(int var, const Polynomial& value) const;

    /// Exact division: requires o | this, checked; used by fraction-free
    /// elimination where divisibility is guaranteed.
    Polynomial divide_exact(const Polynomial& o) const;

    template <typename S>
    S eval(std::span<const S> point) const;

    std::string str() const { return str(default_namer(nvars_)); }
    std::string str(const std::function<std::string(int)>& namer) const;

  private:
    int nvars_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

template <typename S>
S Polynomial::eval(std::span<const S> point) const {
    S acc = S(0);
    for (const auto& [m, c] : terms_) {
        S term = S(c);
        for (auto [v, e] : m.factors())
            for (int i = 0; i < e; ++i) term = term * point[v];
        acc = acc + term;
    }
    return acc;
}

} // namespace sdg
