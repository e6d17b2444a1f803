#include "sdg/forms.hpp"

namespace sdg {

Form0::Form0(SpacePtr m, GroupPtr g, std::vector<int> v)
    : space(std::move(m)), group(std::move(g)), values(std::move(v)) {
    if (static_cast<int>(values.size()) != space->size())
        throw usage_error("0-form needs one value per point");
    for (int x : values)
        if (x < 0 || x >= group->size()) throw usage_error("0-form value out of range");
}

Form1::Form1(SpacePtr m, GroupPtr g, const std::map<std::pair<int, int>, int>& given)
    : space_(std::move(m)), group_(std::move(g)) {
    int e = group_->id();
    for (const auto& [key, v] : given) {
        auto [x, y] = key;
        if (x < 0 || y < 0 || x >= space_->size() || y >= space_->size())
            throw usage_error("1-form key out of range");
        if (!space_->nbr(x, y)) throw usage_error("1-form value on a non-neighbour pair");
        if (v < 0 || v >= group_->size()) throw usage_error("1-form value out of range");
        if (x == y && v != e) throw domain_error("1-form must be the identity on the diagonal");
    }
    for (int x = 0; x < space_->size(); ++x) {
        for (int y = 0; y < space_->size(); ++y) {
            if (!space_->nbr(x, y)) continue;
            auto fwd = given.find({x, y});
            auto bwd = given.find({y, x});
            int v;
            if (fwd != given.end())
                v = fwd->second;
            else if (bwd != given.end())
                v = group_->inv(bwd->second);
            else
                v = e;
            if (x == y && v != e)
                throw domain_error("1-form must be the identity on the diagonal");
            if (fwd != given.end() && bwd != given.end() &&
                group_->inv(fwd->second) != bwd->second)
                throw domain_error("1-form breaks the inverse symmetry w(x,y)^-1 = w(y,x)");
            vals_[{x, y}] = v;
        }
    }
}

int Form1::value(int x, int y) const {
    auto it = vals_.find({x, y});
    if (it == vals_.end()) throw usage_error("1-form evaluated on a non-neighbour pair");
    return it->second;
}

Form2::Form2(SpacePtr m, GroupPtr g, std::map<std::vector<int>, int> vals)
    : space_(std::move(m)), group_(std::move(g)), vals_(std::move(vals)) {
    int e = group_->id();
    for (auto s : space_->simplices(2)) {
        auto it = vals_.find(s);
        if (it == vals_.end()) throw usage_error("2-form misses a simplex value");
        if ((s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) && it->second != e)
            throw domain_error("2-form must be the identity on degenerate simplices");
    }
}

int Form2::value(int x, int y, int z) const {
    auto it = vals_.find({x, y, z});
    if (it == vals_.end()) throw usage_error("2-form evaluated on a non-simplex");
    return it->second;
}

bool Form2::alternating() const {
    for (const auto& [s, v] : vals_) {
        auto check = [&](std::vector<int> p) {
            auto it = vals_.find(p);
            return it != vals_.end() && it->second == group_->inv(v);
        };
        if (!check({s[1], s[0], s[2]})) return false;
        if (!check({s[0], s[2], s[1]})) return false;
        if (!check({s[2], s[1], s[0]})) return false;
    }
    return true;
}

Form1 coboundary0(const Form0& f) {
    std::map<std::pair<int, int>, int> vals;
    const auto& g = *f.group;
    for (int x = 0; x < f.space->size(); ++x)
        for (int y = 0; y < f.space->size(); ++y)
            if (f.space->nbr(x, y)) vals[{x, y}] = g.mul(g.inv(f.value(x)), f.value(y));
    return Form1(f.space, f.group, vals);
}

Form2 coboundary1(const Form1& w) {
    std::map<std::vector<int>, int> vals;
    const auto& g = *w.group();
    for (auto s : w.space()->simplices(2))
        vals[s] = g.mul(g.mul(w.value(s[0], s[1]), w.value(s[1], s[2])), w.value(s[2], s[0]));
    return Form2(w.space(), w.group(), std::move(vals));
}

bool is_closed(const Form1& w) {
    Form2 dw = coboundary1(w);
    int e = w.group()->id();
    for (auto s : w.space()->simplices(2))
        if (dw.value(s[0], s[1], s[2]) != e) return false;
    return true;
}

Form1 maurer_cartan(const GroupPtr& g) {
    std::vector<std::string> points;
    for (int i = 0; i < g->size(); ++i) points.push_back(g->name(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g->size(); ++i)
        for (int j = i + 1; j < g->size(); ++j) edges.push_back({i, j});
    SpacePtr total = make_space(std::move(points), edges);
    std::vector<int> identity(static_cast<size_t>(g->size()));
    for (int i = 0; i < g->size(); ++i) identity[static_cast<size_t>(i)] = i;
    return coboundary0(Form0(total, g, identity));
}

Distribution::Distribution(SpacePtr m, std::vector<std::vector<bool>> strong)
    : space_(std::move(m)), strong_(std::move(strong)) {
    int n = space_->size();
    if (static_cast<int>(strong_.size()) != n) throw usage_error("distribution matrix size");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(strong_[static_cast<size_t>(x)].size()) != n)
            throw usage_error("distribution matrix size");
        if (!strong_[static_cast<size_t>(x)][static_cast<size_t>(x)])
            throw domain_error("distribution must be reflexive");
        for (int y = 0; y < n; ++y) {
            if (strong_[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
                if (!space_->nbr(x, y))
                    throw domain_error("distribution must refine the neighbour relation");
                if (!strong_[static_cast<size_t>(y)][static_cast<size_t>(x)])
                    throw domain_error("distribution must be symmetric");
            }
        }
    }
}

Distribution distribution_from_form(const Form1& w) {
    int n = w.space()->size();
    int e = w.group()->id();
    std::vector<std::vector<bool>> strong(static_cast<size_t>(n),
                                          std::vector<bool>(static_cast<size_t>(n), false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (w.space()->nbr(x, y) && w.value(x, y) == e)
                strong[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
    return Distribution(w.space(), std::move(strong));
}

bool is_involutive(const Distribution& d) {
    int n = d.space()->size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (d.strong(x, y) && d.strong(x, z) && d.space()->nbr(y, z) && !d.strong(y, z))
                    return false;
    return true;
}

bool is_integral_subset(const Distribution& d, const std::vector<int>& subset) {
    for (int x : subset)
        if (x < 0 || x >= d.space()->size()) throw usage_error("subset index out of range");
    for (int x : subset)
        for (int y : subset)
            if (d.space()->nbr(x, y) != d.strong(x, y)) return false;
    return true;
}

} // namespace sdg
