#include "sdg/verify.hpp"

#include "sdg/connection.hpp"
#include "sdg/jet.hpp"

namespace sdg {

std::uint64_t rng_next(std::uint64_t& state, std::uint64_t bound) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return bound == 0 ? z : z % bound;
}

Rational random_rational(std::uint64_t& state, int num_range, int den_range) {
    long num = static_cast<long>(rng_next(state, 2 * num_range + 1)) - num_range;
    long den = 1 + static_cast<long>(rng_next(state, den_range));
    return rat(num, den);
}

Expr random_poly_expr(std::uint64_t& state, int arity, int depth) {
    if (depth <= 0 || rng_next(state, 4) == 0) {
        if (rng_next(state, 3) == 0)
            return Expr::constant(arity, random_rational(state, 5, 3));
        return Expr::variable(arity, static_cast<int>(rng_next(state, arity)));
    }
    switch (rng_next(state, 4)) {
        case 0: return random_poly_expr(state, arity, depth - 1) + random_poly_expr(state, arity, depth - 1);
        case 1: return random_poly_expr(state, arity, depth - 1) - random_poly_expr(state, arity, depth - 1);
        case 2: return random_poly_expr(state, arity, depth - 1) * random_poly_expr(state, arity, depth - 1);
        default: return pow(random_poly_expr(state, arity, depth - 1), 2 + static_cast<int>(rng_next(state, 2)));
    }
}

Expr random_smooth_expr(std::uint64_t& state, int arity, int depth) {
    if (depth <= 0 || rng_next(state, 4) == 0) {
        if (rng_next(state, 3) == 0)
            return Expr::constant(arity, random_rational(state, 4, 3));
        return Expr::variable(arity, static_cast<int>(rng_next(state, arity)));
    }
    switch (rng_next(state, 9)) {
        case 0: return random_smooth_expr(state, arity, depth - 1) + random_smooth_expr(state, arity, depth - 1);
        case 1: return random_smooth_expr(state, arity, depth - 1) - random_smooth_expr(state, arity, depth - 1);
        case 2:
        case 3: return random_smooth_expr(state, arity, depth - 1) * random_smooth_expr(state, arity, depth - 1);
        case 4: return random_smooth_expr(state, arity, depth - 1) / random_smooth_expr(state, arity, depth - 1);
        case 5: return pow(random_smooth_expr(state, arity, depth - 1), 2 + static_cast<int>(rng_next(state, 2)));
        case 6: return exp(random_smooth_expr(state, arity, depth - 2 > 0 ? depth - 2 : 0));
        case 7: return sin(random_smooth_expr(state, arity, depth - 1));
        default: return cos(random_smooth_expr(state, arity, depth - 1));
    }
}

// ---------------------------------------------------------------------------
// combinatorial suites
// ---------------------------------------------------------------------------

SuiteResult verify_bianchi_exhaustive_z2() {
    SuiteResult out;
    out.suite = "bianchi-z2";
    GroupPtr z2 = cyclic_group(2);
    SpacePtr m = std::make_shared<NeighbourSpace>(NeighbourSpace::complete(4));
    auto simplices = m->simplices(3);
    // six unordered edges on four points
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    for (int mask = 0; mask < (1 << 6); ++mask) {
        std::map<std::pair<int, int>, int> vals;
        for (size_t e = 0; e < edges.size(); ++e)
            vals[edges[e]] = (mask >> e) & 1;
        GroupConnection nabla(m, z2, vals);
        for (const auto& s : simplices) {
            ++out.cases;
            if (!bianchi_check(nabla, s[0], s[1], s[2], s[3]))
                out.fail("mask=" + std::to_string(mask) + " simplex=(" + std::to_string(s[0]) +
                         "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                         std::to_string(s[3]) + ")");
        }
    }
    return out;
}

SuiteResult verify_bianchi(const std::string& group, int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "bianchi";
    out.seed = seed;
    GroupPtr g = named_group(group);
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        int n = 4 + static_cast<int>(rng_next(state, 2));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng_next(state, 4) != 0) edges.push_back({i, j}); // dense random graph
        SpacePtr m = make_space(numbered_points(n), edges);
        auto simplices = m->simplices(3);
        if (simplices.empty()) {
            m = std::make_shared<NeighbourSpace>(NeighbourSpace::complete(n));
            simplices = m->simplices(3);
        }
        std::map<std::pair<int, int>, int> vals;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m->nbr(i, j))
                    vals[{i, j}] = static_cast<int>(rng_next(state, static_cast<std::uint64_t>(g->size())));
        GroupConnection nabla(m, g, vals);
        for (const auto& s : simplices) {
            ++out.cases;
            if (!bianchi_check(nabla, s[0], s[1], s[2], s[3]))
                out.fail("trial=" + std::to_string(trial) + " simplex=(" + std::to_string(s[0]) +
                         "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                         std::to_string(s[3]) + ")");
        }
    }
    return out;
}

namespace {

/// enumerate every 1-form over G on the space: one value per unordered edge
template <typename Fn>
void for_each_form(const SpacePtr& m, const GroupPtr& g, Fn&& fn) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m->size(); ++i)
        for (int j = i + 1; j < m->size(); ++j)
            if (m->nbr(i, j)) edges.push_back({i, j});
    std::vector<int> choice(edges.size(), 0);
    while (true) {
        std::map<std::pair<int, int>, int> vals;
        for (size_t e = 0; e < edges.size(); ++e) vals[edges[e]] = choice[e];
        fn(Form1(m, g, vals));
        size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < g->size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
        if (choice.empty()) break;
    }
}

} // namespace

SuiteResult verify_closed_involutive(int max_points, const std::vector<std::string>& groups) {
    SuiteResult out;
    out.suite = "closed-involutive";
    for (const auto& gname : groups) {
        GroupPtr g = named_group(gname);
        for (int n = 1; n <= max_points; ++n) {
            std::vector<std::pair<int, int>> all_edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) all_edges.push_back({i, j});
            for (int mask = 0; mask < (1 << all_edges.size()); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (size_t e = 0; e < all_edges.size(); ++e)
                    if ((mask >> e) & 1) edges.push_back(all_edges[e]);
                SpacePtr m = make_space(numbered_points(n), edges);
                for_each_form(m, g, [&](const Form1& w) {
                    ++out.cases;
                    if (is_closed(w) && !is_involutive(distribution_from_form(w)))
                        out.fail(gname + " n=" + std::to_string(n) +
                                 " mask=" + std::to_string(mask));
                });
            }
        }
    }
    return out;
}

SuiteResult verify_ddzero(const std::string& group, int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "ddzero";
    out.seed = seed;
    GroupPtr g = named_group(group);
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        int n = 2 + static_cast<int>(rng_next(state, 4));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng_next(state, 3) != 0) edges.push_back({i, j});
        SpacePtr m = make_space(numbered_points(n), edges);
        std::vector<int> values;
        for (int i = 0; i < n; ++i)
            values.push_back(static_cast<int>(rng_next(state, static_cast<std::uint64_t>(g->size()))));
        Form0 f(m, g, values);
        Form2 ddf = coboundary1(coboundary0(f));
        bool ok = true;
        for (const auto& s : m->simplices(2))
            if (ddf.value(s[0], s[1], s[2]) != g->id()) ok = false;
        ++out.cases;
        if (!ok) out.fail("trial=" + std::to_string(trial));
    }
    return out;
}

// ---------------------------------------------------------------------------
// algebra and jet suites
// ---------------------------------------------------------------------------

namespace {

Polynomial random_polynomial(std::uint64_t& state, int nvars, int max_terms) {
    Polynomial p(nvars);
    int terms = 1 + static_cast<int>(rng_next(state, static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) {
            int e = static_cast<int>(rng_next(state, 4));
            if (e > 0) m = m * Monomial::var(v, e);
        }
        p.add_term(m, random_rational(state, 9, 4));
    }
    return p;
}

} // namespace

SuiteResult verify_ring(int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "ring";
    out.seed = seed;
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        int nvars = 1 + static_cast<int>(rng_next(state, 3));
        Polynomial a = random_polynomial(state, nvars, 4);
        Polynomial b = random_polynomial(state, nvars, 4);
        Polynomial c = random_polynomial(state, nvars, 4);
        ++out.cases;
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * b == b * a && a + b == b + a;
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + Polynomial::zero(nvars) == a;
        ok = ok && a * Polynomial::constant(nvars, rat(1)) == a;
        if (!ok) out.fail("trial=" + std::to_string(trial));
    }
    return out;
}

SuiteResult verify_cancel(int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "cancel";
    out.seed = seed;
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        Expr u = random_poly_expr(state, 1, 4);
        ++out.cases;
        if (trial % 2 == 0) {
            // equal as functions, distinct as trees: v = u + (x - x) * q
            Expr x = Expr::variable(1, 0);
            Expr v = u + (x - x) * random_poly_expr(state, 1, 3);
            if (!cancel_d(u, v)) out.fail("equal pair rejected, trial=" + std::to_string(trial));
        } else {
            Expr v = random_poly_expr(state, 1, 4);
            bool same = u.to_polynomial() == v.to_polynomial();
            if (cancel_d(u, v) != same)
                out.fail("random pair misjudged, trial=" + std::to_string(trial));
        }
    }
    return out;
}

SuiteResult verify_monad(int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "monad";
    out.seed = seed;
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        int n = 2 + static_cast<int>(rng_next(state, 2));
        Expr alpha = random_poly_expr(state, n, 4);
        ++out.cases;
        if (!monad_check(alpha, weil_Dn(n))) out.fail("trial=" + std::to_string(trial));
    }
    return out;
}

SuiteResult verify_derivative(int trials, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "derivative";
    out.seed = seed;
    std::uint64_t state = seed;
    Real step = Real::parse("1e-30");
    Real tol = Real::parse("1e-20");
    Real tiny = Real::parse("1e-30");
    Real huge = Real::parse("1e30");
    int produced = 0;
    long guard = 0;
    while (produced < trials && guard < 200L * trials) {
        ++guard;
        try {
            // construction can fold a division by a literal zero and throw
            int arity = 1 + static_cast<int>(rng_next(state, 3));
            Expr f = random_smooth_expr(state, arity, 5);
            int var = static_cast<int>(rng_next(state, static_cast<std::uint64_t>(arity)));
            std::vector<Real> base;
            for (int i = 0; i < arity; ++i) {
                // positive region keeps log and div mostly in-domain
                base.push_back(Real(random_rational(state, 0, 1) + rat(1, 4) +
                                    rat(static_cast<long>(rng_next(state, 8)), 4)));
            }
            Real ad = derivative(f, var, base);
            std::vector<Real> up = base, dn = base;
            up[static_cast<size_t>(var)] = up[static_cast<size_t>(var)] + step;
            dn[static_cast<size_t>(var)] = dn[static_cast<size_t>(var)] - step;
            Real fd = (f.eval(up) - f.eval(dn)) / (Real(2) * step);
            if (!ad.is_finite() || !fd.is_finite()) continue;
            if (abs(ad) > huge) continue;
            Real denom = abs(ad) < tiny ? tiny : abs(ad);
            Real rel = abs(fd - ad) / denom;
            ++produced;
            ++out.cases;
            if (!(rel <= tol))
                out.fail("expr=" + f.str() + " rel=" + rel.str());
        } catch (const domain_error&) {
            continue; // out-of-domain sample; draw another
        }
    }
    return out;
}

} // namespace sdg
