#include "sdg/expr.hpp"

#include <cctype>
#include <functional>

namespace sdg {

namespace {

Expr::NodePtr make_node(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

} // namespace

Expr Expr::constant(int arity, const Rational& c) {
    return Expr(arity, make_node({Kind::constant, c, -1, 0, nullptr, nullptr}));
}

Expr Expr::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw usage_error("variable index out of range");
    return Expr(arity, make_node({Kind::variable, Rational(0), index, 0, nullptr, nullptr}));
}

const Rational& Expr::constant_value() const {
    if (!is_constant()) throw usage_error("expression is not constant");
    return root_->value;
}

int Expr::join_arity(const Expr& a, const Expr& b) {
    if (!a.valid() || !b.valid()) throw usage_error("operation on empty expression");
    if (a.arity_ != b.arity_) throw usage_error("expression arity mismatch");
    return a.arity_;
}

Expr operator+(const Expr& a, const Expr& b) {
    int ar = Expr::join_arity(a, b);
    if (a.is_constant() && b.is_constant())
        return Expr::constant(ar, a.constant_value() + b.constant_value());
    if (a.is_constant() && a.constant_value() == 0) return b;
    if (b.is_constant() && b.constant_value() == 0) return a;
    return Expr(ar, make_node({Expr::Kind::add, Rational(0), -1, 0, a.root(), b.root()}));
}

Expr operator-(const Expr& a, const Expr& b) {
    int ar = Expr::join_arity(a, b);
    if (a.is_constant() && b.is_constant())
        return Expr::constant(ar, a.constant_value() - b.constant_value());
    if (b.is_constant() && b.constant_value() == 0) return a;
    return Expr(ar, make_node({Expr::Kind::sub, Rational(0), -1, 0, a.root(), b.root()}));
}

Expr operator*(const Expr& a, const Expr& b) {
    int ar = Expr::join_arity(a, b);
    if (a.is_constant() && b.is_constant())
        return Expr::constant(ar, a.constant_value() * b.constant_value());
    if (a.is_constant()) {
        if (a.constant_value() == 0) return Expr::constant(ar, Rational(0));
        if (a.constant_value() == 1) return b;
    }
    if (b.is_constant()) {
        if (b.constant_value() == 0) return Expr::constant(ar, Rational(0));
        if (b.constant_value() == 1) return a;
    }
    return Expr(ar, make_node({Expr::Kind::mul, Rational(0), -1, 0, a.root(), b.root()}));
}

Expr operator/(const Expr& a, const Expr& b) {
    int ar = Expr::join_arity(a, b);
    if (b.is_constant()) {
        if (b.constant_value() == 0) throw domain_error("division by zero");
        if (a.is_constant()) return Expr::constant(ar, a.constant_value() / b.constant_value());
        if (b.constant_value() == 1) return a;
    }
    return Expr(ar, make_node({Expr::Kind::div, Rational(0), -1, 0, a.root(), b.root()}));
}

Expr operator-(const Expr& a) { return Expr::constant(a.arity(), Rational(0)) - a; }

Expr pow(const Expr& a, int e) {
    if (e == 0) return Expr::constant(a.arity(), Rational(1));
    if (e == 1) return a;
    if (a.is_constant()) return Expr::constant(a.arity(), scalar_ops<Rational>::pow(a.constant_value(), e));
    return Expr(a.arity(), make_node({Expr::Kind::pow, Rational(0), -1, e, a.root(), nullptr}));
}

Expr exp(const Expr& a) {
    return Expr(a.arity(), make_node({Expr::Kind::exp_fn, Rational(0), -1, 0, a.root(), nullptr}));
}
Expr log(const Expr& a) {
    return Expr(a.arity(), make_node({Expr::Kind::log_fn, Rational(0), -1, 0, a.root(), nullptr}));
}
Expr sin(const Expr& a) {
    return Expr(a.arity(), make_node({Expr::Kind::sin_fn, Rational(0), -1, 0, a.root(), nullptr}));
}
Expr cos(const Expr& a) {
    return Expr(a.arity(), make_node({Expr::Kind::cos_fn, Rational(0), -1, 0, a.root(), nullptr}));
}

bool Expr::references(int var) const {
    std::function<bool(const Node&)> rec = [&](const Node& n) -> bool {
        switch (n.kind) {
            case Kind::constant: return false;
            case Kind::variable: return n.var == var;
            default:
                if (n.a && rec(*n.a)) return true;
                return n.b && rec(*n.b);
        }
    };
    return rec(*root_);
}

bool Expr::is_polynomial() const {
    try {
        (void)to_polynomial();
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

Polynomial Expr::to_polynomial() const {
    std::function<Polynomial(const Node&)> rec = [&](const Node& n) -> Polynomial {
        switch (n.kind) {
            case Kind::constant: return Polynomial::constant(arity_, n.value);
            case Kind::variable: return Polynomial::variable(arity_, n.var);
            case Kind::add: return rec(*n.a) + rec(*n.b);
            case Kind::sub: return rec(*n.a) - rec(*n.b);
            case Kind::mul: return rec(*n.a) * rec(*n.b);
            case Kind::div: {
                Polynomial den = rec(*n.b);
                if (!den.is_constant() || den.is_zero())
                    throw domain_error("expression is not polynomial: division");
                return rec(*n.a) * (Rational(1) / den.constant_term());
            }
            case Kind::pow: {
                Polynomial base = rec(*n.a);
                if (n.exponent >= 0) return base.pow(n.exponent);
                if (!base.is_constant() || base.is_zero())
                    throw domain_error("expression is not polynomial: negative power");
                return Polynomial::constant(
                    arity_, scalar_ops<Rational>::pow(base.constant_term(), n.exponent));
            }
            default: throw domain_error("expression is not polynomial: transcendental node");
        }
    };
    return rec(*root_);
}

// ---------------------------------------------------------------------------
// derivative via expression-valued dual numbers
// ---------------------------------------------------------------------------

Expr Expr::derivative(int var) const {
    struct Dual {
        Expr v, d;
    };
    Expr zero = Expr::constant(arity_, Rational(0));
    Expr one = Expr::constant(arity_, Rational(1));
    std::function<Dual(const Node&)> rec = [&](const Node& n) -> Dual {
        switch (n.kind) {
            case Kind::constant: return {Expr(arity_, make_node(Node(n))), zero};
            case Kind::variable:
                return {Expr(arity_, make_node(Node(n))), n.var == var ? one : zero};
            case Kind::add: {
                Dual a = rec(*n.a), b = rec(*n.b);
                return {a.v + b.v, a.d + b.d};
            }
            case Kind::sub: {
                Dual a = rec(*n.a), b = rec(*n.b);
                return {a.v - b.v, a.d - b.d};
            }
            case Kind::mul: {
                Dual a = rec(*n.a), b = rec(*n.b);
                return {a.v * b.v, a.d * b.v + a.v * b.d};
            }
            case Kind::div: {
                Dual a = rec(*n.a), b = rec(*n.b);
                return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
            }
            case Kind::pow: {
                Dual a = rec(*n.a);
                Expr val = pow(a.v, n.exponent);
                Expr dv = Expr::constant(arity_, Rational(n.exponent)) * pow(a.v, n.exponent - 1) *
                          a.d;
                return {val, dv};
            }
            case Kind::exp_fn: {
                Dual a = rec(*n.a);
                return {sdg::exp(a.v), sdg::exp(a.v) * a.d};
            }
            case Kind::log_fn: {
                Dual a = rec(*n.a);
                return {sdg::log(a.v), a.d / a.v};
            }
            case Kind::sin_fn: {
                Dual a = rec(*n.a);
                return {sdg::sin(a.v), sdg::cos(a.v) * a.d};
            }
            case Kind::cos_fn: {
                Dual a = rec(*n.a);
                return {sdg::cos(a.v), zero - sdg::sin(a.v) * a.d};
            }
        }
        throw error("corrupt expression node");
    };
    return rec(*root_).d;
}

Expr Expr::substitute(int var, const Expr& replacement) const {
    if (replacement.arity_ != arity_) throw usage_error("substitution arity mismatch");
    std::function<Expr(const Node&)> rec = [&](const Node& n) -> Expr {
        switch (n.kind) {
            case Kind::constant: return Expr(arity_, make_node(Node(n)));
            case Kind::variable:
                return n.var == var ? replacement : Expr(arity_, make_node(Node(n)));
            case Kind::add: return rec(*n.a) + rec(*n.b);
            case Kind::sub: return rec(*n.a) - rec(*n.b);
            case Kind::mul: return rec(*n.a) * rec(*n.b);
            case Kind::div: return rec(*n.a) / rec(*n.b);
            case Kind::pow: return pow(rec(*n.a), n.exponent);
            case Kind::exp_fn: return sdg::exp(rec(*n.a));
            case Kind::log_fn: return sdg::log(rec(*n.a));
            case Kind::sin_fn: return sdg::sin(rec(*n.a));
            case Kind::cos_fn: return sdg::cos(rec(*n.a));
        }
        throw error("corrupt expression node");
    };
    return rec(*root_);
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string s;
    size_t i = 0;
    int max_var = -1;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }

    // parse with a provisional arity large enough for any index; remapped after
    static constexpr int kMaxVars = 64;

    Expr parse_expr() {
        Expr e = parse_term();
        while (true) {
            if (accept('+'))
                e = e + parse_term();
            else if (accept('-'))
                e = e - parse_term();
            else
                return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_unary();
        while (true) {
            if (accept('*'))
                e = e * parse_unary();
            else if (accept('/'))
                e = e / parse_unary();
            else
                return e;
        }
    }

    Expr parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (accept('^')) return pow(base, parse_exponent());
        return base;
    }

    int parse_exponent() {
        skip();
        bool paren = accept('(');
        bool neg = accept('-');
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw usage_error("expected integer exponent in '" + s + "'");
        int e = std::stoi(s.substr(start, i - start));
        if (paren && !accept(')')) throw usage_error("missing ')' after exponent");
        return neg ? -e : e;
    }

    Expr parse_primary() {
        skip();
        if (i >= s.size()) throw usage_error("unexpected end of expression '" + s + "'");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return Expr::constant(kMaxVars, rat_parse(s.substr(start, i - start)));
        }
        if (c == '(') {
            ++i;
            Expr e = parse_expr();
            if (!accept(')')) throw usage_error("missing ')' in '" + s + "'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            std::string name = s.substr(start, i - start);
            if (name == "exp" || name == "log" || name == "sin" || name == "cos") {
                if (!accept('(')) throw usage_error("expected '(' after " + name);
                Expr arg = parse_expr();
                if (!accept(')')) throw usage_error("missing ')' after " + name + " argument");
                if (name == "exp") return sdg::exp(arg);
                if (name == "log") return sdg::log(arg);
                if (name == "sin") return sdg::sin(arg);
                return sdg::cos(arg);
            }
            int index = var_index(name);
            max_var = std::max(max_var, index);
            return Expr::variable(kMaxVars, index);
        }
        throw usage_error("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
    }

    static int var_index(const std::string& name) {
        if (name == "x") return 0;
        if (name == "y") return 1;
        if (name == "t") return 2;
        if (name.size() >= 2 && name[0] == 'x') {
            for (size_t k = 1; k < name.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(name[k])))
                    throw usage_error("unknown variable '" + name + "'");
            int idx = std::stoi(name.substr(1)) - 1;
            if (idx < 0 || idx >= kMaxVars) throw usage_error("variable index out of range");
            return idx;
        }
        throw usage_error("unknown variable '" + name + "'");
    }
};

Expr remap_arity(const Expr& e, int arity) {
    std::function<Expr(const Expr::Node&)> rec = [&](const Expr::Node& n) -> Expr {
        switch (n.kind) {
            case Expr::Kind::constant: return Expr::constant(arity, n.value);
            case Expr::Kind::variable:
                if (n.var >= arity) throw usage_error("variable index exceeds declared arity");
                return Expr::variable(arity, n.var);
            case Expr::Kind::add: return rec(*n.a) + rec(*n.b);
            case Expr::Kind::sub: return rec(*n.a) - rec(*n.b);
            case Expr::Kind::mul: return rec(*n.a) * rec(*n.b);
            case Expr::Kind::div: return rec(*n.a) / rec(*n.b);
            case Expr::Kind::pow: return pow(rec(*n.a), n.exponent);
            case Expr::Kind::exp_fn: return exp(rec(*n.a));
            case Expr::Kind::log_fn: return log(rec(*n.a));
            case Expr::Kind::sin_fn: return sin(rec(*n.a));
            case Expr::Kind::cos_fn: return cos(rec(*n.a));
        }
        throw error("corrupt expression node");
    };
    return rec(*e.root());
}

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::pow: return 3;
        default: return 4;
    }
}

} // namespace

Expr Expr::parse(const std::string& text, int arity) {
    Parser p{text};
    Expr e = p.parse_expr();
    if (!p.eof())
        throw usage_error("trailing input at position " + std::to_string(p.i) + " in '" + text +
                          "'");
    int inferred = std::max(p.max_var + 1, 1);
    return remap_arity(e, arity < 0 ? inferred : arity);
}

std::string Expr::str() const {
    auto namer = default_namer(arity_);
    std::function<std::string(const Node&)> print;
    std::function<std::string(const Node&, int)> part = [&](const Node& n, int min_prec) {
        std::string out = print(n);
        bool neg_const = n.kind == Kind::constant && n.value < 0;
        if (precedence(n.kind) < min_prec || neg_const) return "(" + out + ")";
        return out;
    };
    print = [&](const Node& n) -> std::string {
        switch (n.kind) {
            case Kind::constant: return rat_str(n.value);
            case Kind::variable: return namer(n.var);
            case Kind::add: return part(*n.a, 1) + "+" + part(*n.b, 1);
            case Kind::sub: return part(*n.a, 1) + "-" + part(*n.b, 2);
            case Kind::mul: return part(*n.a, 2) + "*" + part(*n.b, 2);
            case Kind::div: return part(*n.a, 2) + "/" + part(*n.b, 3);
            case Kind::pow: return part(*n.a, 4) + "^" + std::to_string(n.exponent);
            case Kind::exp_fn: return "exp(" + print(*n.a) + ")";
            case Kind::log_fn: return "log(" + print(*n.a) + ")";
            case Kind::sin_fn: return "sin(" + print(*n.a) + ")";
            case Kind::cos_fn: return "cos(" + print(*n.a) + ")";
        }
        throw error("corrupt expression node");
    };
    return print(*root_);
}

} // namespace sdg
