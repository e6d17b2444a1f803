#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdg/expr.hpp"

namespace sdg {

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> counterexamples; // capped at 5

    void fail(const std::string& msg) {
        ++failures;
        if (counterexamples.size() < 5) counterexamples.push_back(msg);
    }
};

/// Exhaustive Bianchi sweep: every Z2-valued connection on the complete
/// 4-point space, every ordered 3-simplex.
SuiteResult verify_bianchi_exhaustive_z2();

/// Random connections over the named group on random dense graphs; checks
/// the Bianchi identity on every ordered 3-simplex of each.
SuiteResult verify_bianchi(const std::string& group, int trials, std::uint64_t seed);

/// Exhaustive over all neighbour spaces with <= max_points points and all
/// 1-forms valued in the given groups: closed forms must induce involutive
/// distributions.
SuiteResult verify_closed_involutive(int max_points, const std::vector<std::string>& groups);

/// d(df) = e for random 0-forms over the named group on random spaces.
SuiteResult verify_ddzero(const std::string& group, int trials, std::uint64_t seed);

/// Commutative-ring axioms for random sparse polynomials.
SuiteResult verify_ring(int trials, std::uint64_t seed);

/// The cancellation principle on random polynomial pairs; half of the pairs
/// are engineered to be equal as functions but distinct as trees.
SuiteResult verify_cancel(int trials, std::uint64_t seed);

/// Proposition "M(0) = D(n)" for random polynomial maps on D(2) and D(3).
SuiteResult verify_monad(int trials, std::uint64_t seed);

/// D-lift derivatives against central finite differences at 256-bit
/// precision (step 1e-30, relative tolerance 1e-20).
SuiteResult verify_derivative(int trials, std::uint64_t seed);

/// Random polynomial expression over x1..x<arity>, depth-bounded.
Expr random_poly_expr(std::uint64_t& state, int arity, int depth);
/// Random smooth expression (may use div, exp, log, sin, cos).
Expr random_smooth_expr(std::uint64_t& state, int arity, int depth);
/// Deterministic xorshift step, uniform in [0, bound).
std::uint64_t rng_next(std::uint64_t& state, std::uint64_t bound);
Rational random_rational(std::uint64_t& state, int num_range, int den_range);

} // namespace sdg
