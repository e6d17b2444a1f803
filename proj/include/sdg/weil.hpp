#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdg/real.hpp"
#include "sdg/rewrite.hpp"

namespace sdg {

/// Finite-dimensional quotient of a polynomial ring by a nilpotency ideal,
/// presented by a confluent rewrite system. The basis is the set of
/// irreducible monomials (grlex-ascending, so basis[0] is 1); every non-unit
/// basis monomial is nilpotent, making the augmentation ideal the unique
/// maximal ideal of codimension 1.
class WeilAlgebra {
  public:
    explicit WeilAlgebra(RewriteSystem rules, int max_basis = 10000);

    int nvars() const { return rules_.nvars(); }
    const RewriteSystem& rules() const { return rules_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    /// Maximum total degree occurring in the basis.
    int order() const { return order_; }
    /// Every product of nil_bound() augmentation-zero elements vanishes.
    int nil_bound() const { return nil_bound_; }
    /// Smallest k with x_v^{k+1} = 0.
    int gen_nilpotency(int var) const { return gen_nilpotency_[var]; }

    /// Index of a monomial in the basis, or -1 if it is not irreducible.
    int basis_index(const Monomial& m) const;
    /// Index of the reduced product basis[i]*basis[j], or -1 when it is 0.
    int basis_product(int i, int j) const { return product_[i * dim() + j]; }

    bool same_presentation(const WeilAlgebra& o) const;

  private:
    RewriteSystem rules_;
    std::vector<Monomial> basis_;
    std::vector<int> product_;
    std::vector<int> gen_nilpotency_;
    int order_ = 0;
    int nil_bound_ = 1;
};

using WeilPtr = std::shared_ptr<const WeilAlgebra>;

/// Named families from the axiom scheme.
WeilPtr weil_D();                 // Q[x]/(x^2), dual numbers
WeilPtr weil_Dn(int n);           // pairwise products of n generators vanish
WeilPtr weil_Dk(int k, int n);    // all degree-(k+1) products vanish
WeilPtr weil_DL();                // x2^2 = x1^2, x1*x2 = 0 (Laplacian detector)
WeilPtr weil_D2();                // Q[x]/(x^3)
WeilPtr weil_trivial();           // Q itself
WeilPtr weil_build(int nvars, std::vector<RewriteRule> rules);

/// Tensor product: disjointly renamed variables, relations unioned.
WeilPtr weil_tensor(const WeilPtr& a, const WeilPtr& b);

/// Parse "D", "D(n)", "Dk(k,n)", "DL", "D2", or a presentation of the form
/// `n=2 rels="x1^2=0; x2^2=x1^2"`.
WeilPtr weil_parse(const std::string& spec);

/// Element of a Weil algebra with coefficients on the monomial basis.
/// S is Rational (exact mode) or Real (numeric mode).
template <typename S>
class WeilValue {
  public:
    explicit WeilValue(WeilPtr alg) : alg_(std::move(alg)), c_(alg_->dim(), S(0)) {}

    static WeilValue scalar(WeilPtr alg, const S& v) {
        WeilValue u(std::move(alg));
        u.c_[0] = v;
        return u;
    }
    static WeilValue generator(WeilPtr alg, int var) {
        if (var < 0 || var >= alg->nvars())
            throw usage_error("generator index out of range for this algebra");
        WeilValue u(alg);
        if (auto m = alg->rules().reduce_monomial(Monomial::var(var))) {
            int i = alg->basis_index(*m);
            u.c_[static_cast<size_t>(i)] = S(1);
        }
        return u;
    }

    const WeilPtr& algebra() const { return alg_; }
    const std::vector<S>& coeffs() const { return c_; }
    S& coeff(int i) { return c_[static_cast<size_t>(i)]; }
    const S& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    /// Constant-term projection ("setting d = 0").
    const S& augmentation() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!(v == S(0))) return false;
        return true;
    }

    WeilValue operator-() const {
        WeilValue r(alg_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = S(0) - c_[i];
        return r;
    }
    WeilValue operator+(const WeilValue& o) const {
        check_same(o);
        WeilValue r(alg_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    WeilValue operator-(const WeilValue& o) const {
        check_same(o);
        WeilValue r(alg_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    WeilValue operator*(const WeilValue& o) const {
        check_same(o);
        WeilValue r(alg_);
        int d = alg_->dim();
        for (int i = 0; i < d; ++i) {
            if (c_[static_cast<size_t>(i)] == S(0)) continue;
            for (int j = 0; j < d; ++j) {
                int k = alg_->basis_product(i, j);
                if (k < 0) continue;
                r.c_[static_cast<size_t>(k)] =
                    r.c_[static_cast<size_t>(k)] +
                    c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
            }
        }
        return r;
    }
    WeilValue scaled(const S& k) const {
        WeilValue r(alg_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
        return r;
    }
    WeilValue pow(int e) const;

    bool operator==(const WeilValue& o) const {
        if (!alg_->same_presentation(*o.alg_)) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    /// The nilpotent part u - aug(u).
    WeilValue nil_part() const {
        WeilValue r = *this;
        r.c_[0] = S(0);
        return r;
    }

  private:
    void check_same(const WeilValue& o) const {
        if (alg_ != o.alg_ && !alg_->same_presentation(*o.alg_))
            throw domain_error("Weil algebra mismatch between operands");
    }

    WeilPtr alg_;
    std::vector<S> c_;
};

template <typename S>
WeilValue<S> WeilValue<S>::pow(int e) const {
    if (e < 0) throw domain_error("negative power of a Weil element");
    WeilValue acc = scalar(alg_, S(1));
    WeilValue base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

using WeilElement = WeilValue<Rational>;

/// Smallest k with u^{k+1} = 0, or nullopt when u is not nilpotent (which,
/// in a Weil algebra, happens exactly when the augmentation is nonzero).
template <typename S>
std::optional<int> nilpotency_order(const WeilValue<S>& u) {
    if (!(u.augmentation() == S(0))) return std::nullopt;
    WeilValue<S> p = u;
    for (int k = 0; k <= u.algebra()->nil_bound(); ++k) {
        if (p.is_zero()) return k;
        p = p * u;
    }
    return std::nullopt;
}

} // namespace sdg
