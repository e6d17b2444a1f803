#include "sdg/neighbour.hpp"

#include <algorithm>

namespace sdg {

NeighbourSpace::NeighbourSpace(std::vector<std::string> points,
                               const std::vector<std::pair<int, int>>& edges)
    : points_(std::move(points)) {
    int n = size();
    adj_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) adj_[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw usage_error("edge index out of range");
        adj_[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        adj_[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
    }
}

NeighbourSpace NeighbourSpace::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return NeighbourSpace(numbered_points(n), edges);
}

NeighbourSpace NeighbourSpace::discrete(int n) {
    return NeighbourSpace(numbered_points(n), {});
}

int NeighbourSpace::point_index(const std::string& name) const {
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) throw usage_error("unknown point '" + name + "'");
    return static_cast<int>(it - points_.begin());
}

std::vector<std::vector<int>> NeighbourSpace::simplices(int k) const {
    if (k < 0 || k > 3) throw usage_error("simplices supports k in 0..3");
    std::vector<std::vector<int>> out;
    std::vector<int> tuple;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == k + 1) {
            out.push_back(tuple);
            return;
        }
        for (int p = 0; p < size(); ++p) {
            bool ok = true;
            for (int q : tuple)
                if (!nbr(p, q)) ok = false;
            if (!ok) continue;
            tuple.push_back(p);
            self(self);
            tuple.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<int> NeighbourSpace::monad(int x) const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (nbr(x, y)) out.push_back(y);
    return out;
}

std::vector<std::string> numbered_points(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

bool preserves_neighbours(const NeighbourSpace& src, const NeighbourSpace& dst,
                          const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.size())
        throw usage_error("morphism map has wrong length");
    for (int v : map)
        if (v < 0 || v >= dst.size()) throw usage_error("morphism map image out of range");
    for (int i = 0; i < src.size(); ++i)
        for (int j = 0; j < src.size(); ++j)
            if (src.nbr(i, j) && !dst.nbr(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]))
                return false;
    return true;
}

} // namespace sdg
