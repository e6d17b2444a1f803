#pragma once

#include <optional>
#include <vector>

#include "sdg/polynomial.hpp"

namespace sdg {

/// One oriented relation: lhs rewrites to rhs, where rhs is zero or a single
/// monomial with coefficient 1 and strictly smaller grlex order.
struct RewriteRule {
    Monomial lhs;
    Polynomial rhs;
};

/// A terminating, confluent rewrite system presenting a monomial /
/// monomial-difference ideal. Construction verifies rule shape and checks
/// every critical pair; non-confluent presentations are rejected.
class RewriteSystem {
  public:
    RewriteSystem(int nvars, std::vector<RewriteRule> rules);

    int nvars() const { return nvars_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    /// Unique normal form; idempotent, and a ring homomorphism onto the
    /// quotient.
    Polynomial normal_form(const Polynomial& p) const;

    /// Normal form of a single monomial: another monomial, or nullopt for 0.
    std::optional<Monomial> reduce_monomial(Monomial m) const;

    /// Union of two systems with the second one's variables shifted.
    static RewriteSystem tensor(const RewriteSystem& a, const RewriteSystem& b);

  private:
    int nvars_;
    std::vector<RewriteRule> rules_;
};

} // namespace sdg
