#include "sdg/resultant.hpp"

#include <algorithm>

#include "sdg/error.hpp"

namespace sdg {

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                      int var) {
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0) throw domain_error("nothing to eliminate");
    int n = p.nvars();
    auto pc = p.coefficients_in(var); // ascending
    auto qc = q.coefficients_in(var);
    std::reverse(pc.begin(), pc.end());
    std::reverse(qc.begin(), qc.end());
    int size = dp + dq;
    std::vector<std::vector<Polynomial>> m(size, std::vector<Polynomial>(size, Polynomial(n)));
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j <= dp; ++j) m[i][i + j] = pc[j];
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j <= dq; ++j) m[dq + i][i + j] = qc[j];
    return m;
}

Polynomial poly_det(std::vector<std::vector<Polynomial>> m, int nvars) {
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(nvars, rat(1));
    int sign = 1;
    Polynomial prev = Polynomial::constant(nvars, rat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial::zero(nvars);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev); // Bareiss: division is exact
            }
            m[i][k] = Polynomial::zero(nvars);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
    return poly_det(sylvester_matrix(p, q, var), p.nvars());
}

namespace {

Polynomial normalize_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

Polynomial content_in(const Polynomial& p, int var, Polynomial (*gcd)(const Polynomial&,
                                                                      const Polynomial&)) {
    Polynomial c = Polynomial::zero(p.nvars());
    for (const auto& coeff : p.coefficients_in(var)) c = gcd(c, coeff);
    return c;
}

// pseudo-remainder of a by b with respect to var
Polynomial prem(Polynomial a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    auto bc = b.coefficients_in(var);
    Polynomial lcb = bc.back();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        Polynomial lca = a.coefficients_in(var).back();
        Polynomial shift = Polynomial::term(a.nvars(), Monomial::var(var, da - db), rat(1));
        a = a * lcb - b * (lca * shift);
    }
    return a;
}

} // namespace

/// gcd over Q[x] or Q[x,y]; monic in the grlex leading coefficient.
static Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return normalize_monic(q);
    if (q.is_zero()) return normalize_monic(p);
    if (p.is_constant() || q.is_constant()) return Polynomial::constant(p.nvars(), rat(1));
    if (p.nvars() > 2) throw usage_error("gcd supported for at most two variables");

    // main variable: one with positive degree in both, else reduce via content
    int var = -1;
    for (int v = 0; v < p.nvars(); ++v)
        if (p.degree_in(v) > 0 && q.degree_in(v) > 0) var = v;
    if (var < 0) {
        for (int v = 0; v < p.nvars(); ++v) {
            if (p.degree_in(v) > 0) return poly_gcd(content_in(p, v, poly_gcd), q);
            if (q.degree_in(v) > 0) return poly_gcd(p, content_in(q, v, poly_gcd));
        }
        return Polynomial::constant(p.nvars(), rat(1));
    }

    Polynomial cp = content_in(p, var, poly_gcd);
    Polynomial cq = content_in(q, var, poly_gcd);
    Polynomial a = p.divide_exact(cp);
    Polynomial b = q.divide_exact(cq);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = prem(a, b, var);
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = r.divide_exact(content_in(r, var, poly_gcd));
        }
    }
    Polynomial pp = a.divide_exact(content_in(a, var, poly_gcd));
    return normalize_monic(poly_gcd(cp, cq) * pp);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return p;
    if (p.nvars() > 2) throw usage_error("squarefree reduction supported for at most two variables");
    Polynomial g = Polynomial::zero(p.nvars());
    g = poly_gcd(p, p.derivative(0));
    if (p.nvars() > 1) g = poly_gcd(g, p.derivative(1));
    if (g.is_constant()) return p;
    return p.divide_exact(g);
}

} // namespace sdg
