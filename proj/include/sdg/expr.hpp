#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdg/polynomial.hpp"
#include "sdg/scalar.hpp"

namespace sdg {

/// Smooth-function expression: rationals, variables, ring operations,
/// integer powers, division, and exp/log/sin/cos. Immutable; subtrees are
/// shared. Constant arithmetic folds at construction.
class Expr {
  public:
    enum class Kind { constant, variable, add, sub, mul, div, pow, exp_fn, log_fn, sin_fn, cos_fn };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        Rational value;  // constant
        int var = -1;    // variable
        int exponent = 0; // pow
        NodePtr a, b;
    };

    Expr() = default;

    int arity() const { return arity_; }
    const NodePtr& root() const { return root_; }
    bool valid() const { return root_ != nullptr; }

    static Expr constant(int arity, const Rational& c);
    static Expr variable(int arity, int index);

    bool is_constant() const { return root_->kind == Kind::constant; }
    const Rational& constant_value() const;
    /// True when the expression denotes a polynomial function (ring
    /// operations plus division by nonzero constants only).
    bool is_polynomial() const;
    Polynomial to_polynomial() const;

    bool references(int var) const;

    /// Parse infix text with variables x1..xn (aliases x, y, t), rational
    /// literals, + - * / ^ and exp/log/sin/cos calls. When `arity` < 0 it is
    /// inferred from the variables used.
    static Expr parse(const std::string& text, int arity = -1);

    std::string str() const;

    template <typename S>
    S eval(std::span<const S> point) const;
    template <typename S>
    S eval(const std::vector<S>& point) const {
        return eval(std::span<const S>(point));
    }

    /// Exact partial derivative, obtained by pushing a dual number with
    /// expression-valued coefficients through the tree.
    Expr derivative(int var) const;

    /// Substitute an expression for a variable (arities must match).
    Expr substitute(int var, const Expr& replacement) const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr pow(const Expr& a, int e);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);
    friend Expr sin(const Expr& a);
    friend Expr cos(const Expr& a);

  private:
    Expr(int arity, NodePtr root) : arity_(arity), root_(std::move(root)) {}
    static int join_arity(const Expr& a, const Expr& b);

    int arity_ = 0;
    NodePtr root_;
};

template <typename S>
S Expr::eval(std::span<const S> point) const {
    using ops = scalar_ops<S>;
    if (static_cast<int>(point.size()) < arity_) throw usage_error("evaluation point too short");
    auto rec = [&](auto&& self, const Node& n) -> S {
        switch (n.kind) {
            case Kind::constant: return ops::from_rational(n.value);
            case Kind::variable: return point[static_cast<size_t>(n.var)];
            case Kind::add: return self(self, *n.a) + self(self, *n.b);
            case Kind::sub: return self(self, *n.a) - self(self, *n.b);
            case Kind::mul: return self(self, *n.a) * self(self, *n.b);
            case Kind::div: return ops::div(self(self, *n.a), self(self, *n.b));
            case Kind::pow: return ops::pow(self(self, *n.a), n.exponent);
            case Kind::exp_fn: return ops::exp(self(self, *n.a));
            case Kind::log_fn: return ops::log(self(self, *n.a));
            case Kind::sin_fn: return ops::sin(self(self, *n.a));
            case Kind::cos_fn: return ops::cos(self(self, *n.a));
        }
        throw error("corrupt expression node");
    };
    return rec(rec, *root_);
}

} // namespace sdg
