#include "sdg/rewrite.hpp"

#include "sdg/error.hpp"

namespace sdg {

RewriteSystem::RewriteSystem(int nvars, std::vector<RewriteRule> rules)
    : nvars_(nvars), rules_(std::move(rules)) {
    for (const auto& r : rules_) {
        if (r.lhs.is_one()) throw domain_error("rewrite rule with constant left-hand side");
        if (r.lhs.max_var() >= nvars_) throw usage_error("rule variable out of range");
        if (!r.rhs.is_zero()) {
            if (r.rhs.term_count() != 1 || r.rhs.leading_coefficient() != 1)
                throw domain_error(
                    "rewrite rules must map a monomial to zero or to a single monomial");
            if (r.rhs.nvars() != nvars_) throw usage_error("rule arity mismatch");
            if (!grlex_less(r.rhs.leading_monomial(), r.lhs))
                throw domain_error("rewrite rule does not decrease grlex order: " +
                                   r.lhs.str(default_namer(nvars_)) + " -> " + r.rhs.str());
        }
    }
    // Critical pairs: for every overlap lcm(lhs_i, lhs_j), both one-step
    // reducts must share a normal form.
    for (size_t i = 0; i < rules_.size(); ++i) {
        for (size_t j = i + 1; j < rules_.size(); ++j) {
            Monomial m = Monomial::lcm(rules_[i].lhs, rules_[j].lhs);
            Polynomial via_i =
                Polynomial::term(nvars_, *m.divide(rules_[i].lhs), rat(1)) * rules_[i].rhs;
            Polynomial via_j =
                Polynomial::term(nvars_, *m.divide(rules_[j].lhs), rat(1)) * rules_[j].rhs;
            if (normal_form(via_i) != normal_form(via_j))
                throw domain_error("rule set is not confluent: critical pair at " +
                                   m.str(default_namer(nvars_)) + " does not resolve");
        }
    }
}

Polynomial RewriteSystem::normal_form(const Polynomial& p) const {
    if (p.nvars() != nvars_) throw usage_error("polynomial arity mismatch with rewrite system");
    Polynomial cur = p;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : cur.terms()) {
            for (const auto& r : rules_) {
                if (auto q = m.divide(r.lhs)) {
                    Polynomial repl = Polynomial::term(nvars_, *q, c) * r.rhs;
                    Polynomial without = cur - Polynomial::term(nvars_, m, c);
                    cur = without + repl;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return cur;
}

std::optional<Monomial> RewriteSystem::reduce_monomial(Monomial m) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules_) {
            if (auto q = m.divide(r.lhs)) {
                if (r.rhs.is_zero()) return std::nullopt;
                m = *q * r.rhs.leading_monomial();
                changed = true;
                break;
            }
        }
    }
    return m;
}

RewriteSystem RewriteSystem::tensor(const RewriteSystem& a, const RewriteSystem& b) {
    int off = a.nvars_;
    int n = a.nvars_ + b.nvars_;
    std::vector<RewriteRule> rules;
    for (const auto& r : a.rules_) {
        Polynomial rhs(n);
        for (const auto& [m, c] : r.rhs.terms()) rhs.add_term(m, c);
        rules.push_back({r.lhs, rhs});
    }
    for (const auto& r : b.rules_) {
        Polynomial rhs(n);
        for (const auto& [m, c] : r.rhs.terms()) rhs.add_term(m.shifted(off), c);
        rules.push_back({r.lhs.shifted(off), rhs});
    }
    return RewriteSystem(n, std::move(rules));
}

} // namespace sdg
