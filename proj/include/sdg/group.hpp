#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

/// Finite group given by a multiplication table; the axioms are verified at
/// construction.
class FiniteGroup {
  public:
    FiniteGroup(std::string label, std::vector<std::string> names,
                std::vector<std::vector<int>> table);

    int size() const { return static_cast<int>(names_.size()); }
    int id() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    /// Conjugation g^h = h^-1 * g * h.
    int conj(int g, int h) const { return mul(mul(inv(h), g), h); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::string& label() const { return label_; }
    int index(const std::string& name) const;
    bool abelian() const;

  private:
    std::string label_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int id_ = -1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n); // n = 3 or 4
GroupPtr dihedral4_group();
GroupPtr quaternion_group();

/// Look up "Z1".."Z12", "S3", "S4", "D4", "Q8".
GroupPtr named_group(const std::string& name);

} // namespace sdg
