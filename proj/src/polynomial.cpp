#include "sdg/polynomial.hpp"

#include <algorithm>

#include "sdg/error.hpp"

namespace sdg {

Monomial Monomial::var(int index, int exponent) {
    if (index < 0) throw usage_error("negative variable index");
    Monomial m;
    if (exponent < 0) throw usage_error("negative exponent in monomial");
    if (exponent > 0) m.exps_.push_back({index, exponent});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (auto [v, e] : exps_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first))
            r.exps_.push_back(*a++);
        else if (a == exps_.end() || b->first < a->first)
            r.exps_.push_back(*b++);
        else {
            r.exps_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (auto [v, e] : o.exps_)
        if (exponent(v) < e) return false;
    return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    if (!divisible_by(o)) return std::nullopt;
    Monomial r;
    for (auto [v, e] : exps_) {
        int rest = e - o.exponent(v);
        if (rest > 0) r.exps_.push_back({v, rest});
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
        if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
            r.exps_.push_back(*i++);
        else if (i == a.exps_.end() || j->first < i->first)
            r.exps_.push_back(*j++);
        else {
            r.exps_.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    return r;
}

Monomial Monomial::shifted(int offset) const {
    Monomial r;
    for (auto [v, e] : exps_) r.exps_.push_back({v + offset, e});
    return r;
}

std::string Monomial::str(const std::function<std::string(int)>& namer) const {
    if (exps_.empty()) return "1";
    std::string out;
    for (auto [v, e] : exps_) {
        if (!out.empty()) out += "*";
        out += namer(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // compare exponents from the highest variable index downward
    auto ia = a.factors().rbegin(), ib = b.factors().rbegin();
    while (ia != a.factors().rend() && ib != b.factors().rend()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return false; // equal degree and same trailing factors implies equal
}

std::function<std::string(int)> default_namer(int nvars) {
    if (nvars <= 3) {
        return [](int i) {
            static const char* names[] = {"x", "y", "t"};
            return std::string(names[i]);
        };
    }
    return [](int i) { return "x" + std::to_string(i + 1); };
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw usage_error("variable index out of range");
    Polynomial p(nvars);
    p.add_term(Monomial::var(index), rat(1));
    return p;
}

Polynomial Polynomial::term(int nvars, const Monomial& m, const Rational& c) {
    if (m.max_var() >= nvars) throw usage_error("monomial variable out of range");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial::one()); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return terms_.empty() ? -1 : d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw domain_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw usage_error("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw usage_error("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw usage_error("polynomial arity mismatch");
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw usage_error("negative polynomial power");
    Polynomial acc = constant(nvars_, rat(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
    int d = degree_in(var);
    if (d < 0) return {};
    std::vector<Polynomial> out(static_cast<size_t>(d) + 1, Polynomial(nvars_));
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        Monomial rest;
        for (auto [v, k] : m.factors())
            if (v != var) rest = rest * Monomial::var(v, k);
        out[e].add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        auto q = m.divide(Monomial::var(var));
        r.add_term(*q, c * e);
    }
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    if (value.nvars_ != nvars_) throw usage_error("polynomial arity mismatch");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int e = m.exponent(var);
        for (auto [v, k] : m.factors())
            if (v != var) rest = rest * Monomial::var(v, k);
        Polynomial t = Polynomial::term(nvars_, rest, c) * value.pow(e);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& o) const {
    if (o.is_zero()) throw domain_error("exact division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    while (!rem.is_zero()) {
        auto q = rem.leading_monomial().divide(o.leading_monomial());
        if (!q) throw domain_error("exact polynomial division failed");
        Rational c = rem.leading_coefficient() / o.leading_coefficient();
        Polynomial t = Polynomial::term(nvars_, *q, c);
        quot = quot + t;
        rem = rem - t * o;
    }
    return quot;
}

std::string Polynomial::str(const std::function<std::string(int)>& namer) const {
    if (terms_.empty()) return "0";
    std::string out;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        }
        if (m.is_one())
            out += rat_str(a);
        else if (a == 1)
            out += m.str(namer);
        else
            out += rat_str(a) + "*" + m.str(namer);
    }
    return out;
}

} // namespace sdg
