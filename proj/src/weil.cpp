#include "sdg/weil.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "sdg/error.hpp"

namespace sdg {

WeilAlgebra::WeilAlgebra(RewriteSystem rules, int max_basis) : rules_(std::move(rules)) {
    // Close {1} under multiplication by the generators, keeping irreducible
    // monomials. Every irreducible monomial is reached this way because its
    // divisors are irreducible too.
    std::set<Monomial, GrlexLess> seen;
    std::deque<Monomial> queue;
    seen.insert(Monomial::one());
    queue.push_back(Monomial::one());
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (int v = 0; v < nvars(); ++v) {
            auto red = rules_.reduce_monomial(m * Monomial::var(v));
            if (!red) continue;
            if (seen.insert(*red).second) {
                if (static_cast<int>(seen.size()) > max_basis)
                    throw domain_error("basis enumeration exceeded bound: "
                                       "quotient is not finite-dimensional");
                queue.push_back(*red);
            }
        }
    }
    basis_.assign(seen.begin(), seen.end());
    for (const auto& m : basis_) order_ = std::max(order_, m.degree());

    // Generators must be nilpotent, else the presentation is not Weil.
    gen_nilpotency_.assign(static_cast<size_t>(nvars()), 0);
    nil_bound_ = 1;
    for (int v = 0; v < nvars(); ++v) {
        std::set<Monomial, GrlexLess> visited;
        std::optional<Monomial> cur = rules_.reduce_monomial(Monomial::var(v));
        int k = 0; // power minus one
        while (cur) {
            if (!visited.insert(*cur).second)
                throw domain_error("not a Weil algebra: generator " +
                                   Monomial::var(v).str(default_namer(nvars())) +
                                   " is not nilpotent");
            cur = rules_.reduce_monomial(*cur * Monomial::var(v));
            ++k;
        }
        gen_nilpotency_[static_cast<size_t>(v)] = k;
        nil_bound_ += k;
    }

    int d = dim();
    product_.assign(static_cast<size_t>(d) * static_cast<size_t>(d), -1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto red = rules_.reduce_monomial(basis_[static_cast<size_t>(i)] *
                                              basis_[static_cast<size_t>(j)]);
            if (red) product_[static_cast<size_t>(i) * d + j] = basis_index(*red);
        }
}

int WeilAlgebra::basis_index(const Monomial& m) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), m, GrlexLess{});
    if (it == basis_.end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis_.begin());
}

bool WeilAlgebra::same_presentation(const WeilAlgebra& o) const {
    return this == &o || (nvars() == o.nvars() && basis_ == o.basis_ &&
                          product_ == o.product_);
}

WeilPtr weil_build(int nvars, std::vector<RewriteRule> rules) {
    return std::make_shared<WeilAlgebra>(RewriteSystem(nvars, std::move(rules)));
}

namespace {
RewriteRule kill(int nvars, const Monomial& m) { return {m, Polynomial::zero(nvars)}; }
} // namespace

WeilPtr weil_D() { return weil_Dk(1, 1); }

WeilPtr weil_Dn(int n) {
    if (n < 1) throw usage_error("D(n) requires n >= 1");
    std::vector<RewriteRule> rules;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            rules.push_back(kill(n, Monomial::var(i) * Monomial::var(j)));
    return weil_build(n, std::move(rules));
}

WeilPtr weil_Dk(int k, int n) {
    if (n < 1 || k < 1) throw usage_error("D_k(n) requires n, k >= 1");
    // all monomials of total degree k+1
    std::vector<RewriteRule> rules;
    std::vector<int> exps(static_cast<size_t>(n), 0);
    auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == n - 1) {
            exps[static_cast<size_t>(var)] = remaining;
            Monomial m;
            for (int i = 0; i < n; ++i)
                if (exps[static_cast<size_t>(i)] > 0)
                    m = m * Monomial::var(i, exps[static_cast<size_t>(i)]);
            rules.push_back(kill(n, m));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    emit(emit, 0, k + 1);
    return weil_build(n, std::move(rules));
}

WeilPtr weil_DL() {
    // The presentation x2^2 = x1^2, x1*x2 = 0 needs the derived relation
    // x1^3 = 0 (x1^3 = x1*x2^2 = (x1*x2)*x2 in the ideal) to be confluent.
    std::vector<RewriteRule> rules;
    rules.push_back({Monomial::var(1, 2),
                     Polynomial::term(2, Monomial::var(0, 2), rat(1))});
    rules.push_back(kill(2, Monomial::var(0) * Monomial::var(1)));
    rules.push_back(kill(2, Monomial::var(0, 3)));
    return weil_build(2, std::move(rules));
}

WeilPtr weil_D2() { return weil_Dk(2, 1); }

WeilPtr weil_trivial() { return weil_build(0, {}); }

WeilPtr weil_tensor(const WeilPtr& a, const WeilPtr& b) {
    return std::make_shared<WeilAlgebra>(RewriteSystem::tensor(a->rules(), b->rules()));
}

// ---------------------------------------------------------------------------
// presentation parsing
// ---------------------------------------------------------------------------

namespace {

struct MonoLexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
};

int parse_var_token(MonoLexer& lx, int nvars) {
    lx.skip();
    char c = lx.s[lx.i];
    if (c == 'y') { ++lx.i; return 1; }
    if (c == 't') { ++lx.i; return 2; }
    if (c != 'x') throw usage_error("expected variable in relation: " + lx.s);
    ++lx.i;
    size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
    if (lx.i == start) return 0; // bare "x"
    int idx = std::stoi(lx.s.substr(start, lx.i - start)) - 1;
    if (idx < 0 || idx >= nvars) throw usage_error("variable index out of range in relation");
    return idx;
}

// monomial := '0' | var ('^' int)? ('*' var ('^' int)?)*
std::optional<Monomial> parse_side(const std::string& text, int nvars) {
    MonoLexer lx{text};
    lx.skip();
    if (!lx.eof() && lx.s[lx.i] == '0') {
        ++lx.i;
        if (!lx.eof()) throw usage_error("trailing input after 0 in relation: " + text);
        return std::nullopt;
    }
    Monomial m;
    while (true) {
        int v = parse_var_token(lx, nvars);
        int e = 1;
        lx.skip();
        if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
            ++lx.i;
            lx.skip();
            size_t start = lx.i;
            while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
                ++lx.i;
            if (lx.i == start) throw usage_error("missing exponent in relation: " + text);
            e = std::stoi(lx.s.substr(start, lx.i - start));
        }
        m = m * Monomial::var(v, e);
        if (lx.eof()) break;
        if (lx.s[lx.i] != '*') throw usage_error("expected '*' in relation: " + text);
        ++lx.i;
    }
    return m;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

WeilPtr weil_parse(const std::string& spec) {
    std::string s = trim(spec);
    if (s == "D") return weil_D();
    if (s == "DL" || s == "D_L") return weil_DL();
    if (s == "D2" || s == "D_2") return weil_D2();
    if (s == "Q" || s.empty()) return weil_trivial();
    if (s.rfind("D(", 0) == 0 && s.back() == ')')
        return weil_Dn(std::stoi(s.substr(2, s.size() - 3)));
    if (s.rfind("Dk(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(3, s.size() - 4);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw usage_error("Dk(k,n) takes two arguments");
        return weil_Dk(std::stoi(trim(inner.substr(0, comma))),
                       std::stoi(trim(inner.substr(comma + 1))));
    }

    // presentation form: n=<count> rels="r1; r2; ..."
    auto npos = s.find("n=");
    auto rpos = s.find("rels=");
    if (npos == std::string::npos || rpos == std::string::npos)
        throw usage_error("unrecognized Weil algebra spec: '" + spec + "'");
    int nvars = std::stoi(s.substr(npos + 2));
    std::string rels = trim(s.substr(rpos + 5));
    if (!rels.empty() && (rels.front() == '"' || rels.front() == '\''))
        rels = rels.substr(1, rels.size() - 2);

    std::vector<RewriteRule> rules;
    size_t pos = 0;
    while (pos < rels.size()) {
        size_t semi = rels.find(';', pos);
        std::string rel = trim(rels.substr(pos, semi == std::string::npos ? semi : semi - pos));
        pos = semi == std::string::npos ? rels.size() : semi + 1;
        if (rel.empty()) continue;
        auto eq = rel.find('=');
        if (eq == std::string::npos) throw usage_error("relation needs '=': " + rel);
        auto lhs = parse_side(rel.substr(0, eq), nvars);
        auto rhs = parse_side(rel.substr(eq + 1), nvars);
        if (!lhs && !rhs) continue;
        if (lhs && rhs && *lhs == *rhs) continue;
        if (!lhs) std::swap(lhs, rhs);
        Polynomial rhs_poly =
            rhs ? Polynomial::term(nvars, *rhs, rat(1)) : Polynomial::zero(nvars);
        // orient downward in grlex
        if (rhs && grlex_less(*lhs, *rhs)) {
            Polynomial p = Polynomial::term(nvars, *lhs, rat(1));
            rules.push_back({*rhs, p});
        } else {
            rules.push_back({*lhs, rhs_poly});
        }
    }
    return weil_build(nvars, std::move(rules));
}

} // namespace sdg
