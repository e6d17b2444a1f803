#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

/// Finite model of the first-order neighbour relation: a reflexive symmetric
/// (not necessarily transitive) relation on a finite point set.
class NeighbourSpace {
  public:
    /// Build from an edge list; reflexive and symmetric closure is taken.
    NeighbourSpace(std::vector<std::string> points,
                   const std::vector<std::pair<int, int>>& edges);

    static NeighbourSpace complete(int n);
    static NeighbourSpace discrete(int n);

    int size() const { return static_cast<int>(points_.size()); }
    bool nbr(int i, int j) const { return adj_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::string& point_name(int i) const { return points_[static_cast<size_t>(i)]; }
    int point_index(const std::string& name) const;

    /// All ordered (k+1)-tuples of pairwise neighbours, k <= 3. Repetitions
    /// are allowed: the relation is reflexive.
    std::vector<std::vector<int>> simplices(int k) const;

    /// The monad of x: every y with y ~ x (including x).
    std::vector<int> monad(int x) const;

  private:
    std::vector<std::string> points_;
    std::vector<std::vector<bool>> adj_;
};

using SpacePtr = std::shared_ptr<const NeighbourSpace>;

inline SpacePtr make_space(std::vector<std::string> points,
                           const std::vector<std::pair<int, int>>& edges) {
    return std::make_shared<NeighbourSpace>(std::move(points), edges);
}

/// Numbered points 0..n-1 for quickly built models.
std::vector<std::string> numbered_points(int n);

/// Does `map` (indices into dst) carry neighbours to neighbours?
bool preserves_neighbours(const NeighbourSpace& src, const NeighbourSpace& dst,
                          const std::vector<int>& map);

} // namespace sdg
