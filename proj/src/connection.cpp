#include "sdg/connection.hpp"

#include <algorithm>

namespace sdg {

namespace {

void require_simplex2(const NeighbourSpace& m, int x, int y, int z) {
    if (!(m.nbr(x, y) && m.nbr(y, z) && m.nbr(x, z)))
        throw domain_error("not an infinitesimal 2-simplex");
}

void require_simplex3(const NeighbourSpace& m, int x, int y, int z, int u) {
    require_simplex2(m, x, y, z);
    if (!(m.nbr(x, u) && m.nbr(y, u) && m.nbr(z, u)))
        throw domain_error("not an infinitesimal 3-simplex");
}

} // namespace

int curvature(const GroupConnection& c, int x, int y, int z) {
    require_simplex2(*c.space(), x, y, z);
    const auto& g = *c.group();
    return g.mul(g.mul(c.transport(x, y), c.transport(y, z)), c.transport(z, x));
}

bool bianchi_check(const GroupConnection& c, int x, int y, int z, int u) {
    require_simplex3(*c.space(), x, y, z, u);
    const auto& g = *c.group();
    int lhs = g.conj(curvature(c, y, z, u), c.transport(y, x));
    lhs = g.mul(lhs, curvature(c, x, y, u));
    lhs = g.mul(lhs, curvature(c, x, u, z));
    lhs = g.mul(lhs, curvature(c, x, z, y));
    return lhs == g.id();
}

// ---------------------------------------------------------------------------
// finite groupoids
// ---------------------------------------------------------------------------

FiniteGroupoid::FiniteGroupoid(int objects, std::vector<std::string> arrow_names,
                               std::vector<int> sources, std::vector<int> targets,
                               std::vector<std::vector<int>> comp)
    : objects_(objects), names_(std::move(arrow_names)), src_(std::move(sources)),
      dst_(std::move(targets)), comp_(std::move(comp)) {
    int n = arrows();
    if (static_cast<int>(src_.size()) != n || static_cast<int>(dst_.size()) != n ||
        static_cast<int>(comp_.size()) != n)
        throw usage_error("groupoid table sizes disagree");
    for (int a = 0; a < n; ++a) {
        if (src_[static_cast<size_t>(a)] < 0 || src_[static_cast<size_t>(a)] >= objects_ ||
            dst_[static_cast<size_t>(a)] < 0 || dst_[static_cast<size_t>(a)] >= objects_)
            throw usage_error("groupoid arrow endpoint out of range");
        if (static_cast<int>(comp_[static_cast<size_t>(a)].size()) != n)
            throw usage_error("groupoid composition table is not square");
    }
    // composition defined exactly on composable pairs, with matching endpoints
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = comp_[static_cast<size_t>(a)][static_cast<size_t>(b)];
            bool composable = dst(a) == src(b);
            if (composable != (ab >= 0))
                throw domain_error("groupoid composition defined on the wrong pairs");
            if (ab >= 0 && (ab >= n || src(ab) != src(a) || dst(ab) != dst(b)))
                throw domain_error("groupoid composition endpoints are wrong");
        }
    // identities
    id_.assign(static_cast<size_t>(objects_), -1);
    for (int o = 0; o < objects_; ++o) {
        for (int a = 0; a < n; ++a) {
            if (src(a) != o || dst(a) != o) continue;
            bool is_id = true;
            for (int b = 0; b < n && is_id; ++b) {
                if (src(b) == o && comp_[static_cast<size_t>(a)][static_cast<size_t>(b)] != b)
                    is_id = false;
                if (dst(b) == o && comp_[static_cast<size_t>(b)][static_cast<size_t>(a)] != b)
                    is_id = false;
            }
            if (is_id) {
                id_[static_cast<size_t>(o)] = a;
                break;
            }
        }
        if (id_[static_cast<size_t>(o)] < 0)
            throw domain_error("groupoid object without identity arrow");
    }
    // associativity on composable triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (dst(a) != src(b)) continue;
            for (int c = 0; c < n; ++c) {
                if (dst(b) != src(c)) continue;
                if (compose(compose(a, b), c) != compose(a, compose(b, c)))
                    throw domain_error("groupoid composition is not associative");
            }
        }
    // inverses
    inv_.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (src(b) != dst(a) || dst(b) != src(a)) continue;
            if (compose(a, b) == identity(src(a)) && compose(b, a) == identity(src(b))) {
                inv_[static_cast<size_t>(a)] = b;
                break;
            }
        }
        if (inv_[static_cast<size_t>(a)] < 0) throw domain_error("groupoid arrow without inverse");
    }
}

int FiniteGroupoid::compose(int a, int b) const {
    if (dst(a) != src(b)) throw domain_error("arrows are not composable");
    return comp_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

int FiniteGroupoid::arrow_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw usage_error("unknown arrow '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

GroupoidPtr FiniteGroupoid::pair_groupoid(int objects) {
    int n = objects * objects;
    std::vector<std::string> names;
    std::vector<int> src, dst;
    for (int i = 0; i < objects; ++i)
        for (int j = 0; j < objects; ++j) {
            names.push_back(std::to_string(i) + "->" + std::to_string(j));
            src.push_back(i);
            dst.push_back(j);
        }
    std::vector<std::vector<int>> comp(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (dst[static_cast<size_t>(a)] == src[static_cast<size_t>(b)])
                comp[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    src[static_cast<size_t>(a)] * objects + dst[static_cast<size_t>(b)];
    return std::make_shared<FiniteGroupoid>(objects, std::move(names), std::move(src),
                                            std::move(dst), std::move(comp));
}

GroupoidPtr FiniteGroupoid::from_group(int objects, const GroupPtr& g) {
    int k = g->size();
    int n = objects * objects * k;
    auto encode = [&](int i, int j, int h) { return (i * objects + j) * k + h; };
    std::vector<std::string> names;
    std::vector<int> src, dst;
    for (int i = 0; i < objects; ++i)
        for (int j = 0; j < objects; ++j)
            for (int h = 0; h < k; ++h) {
                names.push_back(std::to_string(i) + "->" + std::to_string(j) + ":" + g->name(h));
                src.push_back(i);
                dst.push_back(j);
            }
    std::vector<std::vector<int>> comp(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (dst[static_cast<size_t>(a)] != src[static_cast<size_t>(b)]) continue;
            int ga = a % k, gb = b % k;
            comp[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                encode(src[static_cast<size_t>(a)], dst[static_cast<size_t>(b)], g->mul(ga, gb));
        }
    return std::make_shared<FiniteGroupoid>(objects, std::move(names), std::move(src),
                                            std::move(dst), std::move(comp));
}

GroupoidConnection::GroupoidConnection(SpacePtr m, GroupoidPtr phi,
                                       std::map<std::pair<int, int>, int> given)
    : space_(std::move(m)), phi_(std::move(phi)), vals_(std::move(given)) {
    if (phi_->objects() != space_->size())
        throw usage_error("groupoid objects must match the neighbour space points");
    for (const auto& [key, a] : vals_) {
        auto [x, y] = key;
        if (!space_->nbr(x, y)) throw usage_error("connection value on a non-neighbour pair");
        if (a < 0 || a >= phi_->arrows()) throw usage_error("connection arrow out of range");
        if (phi_->src(a) != x || phi_->dst(a) != y)
            throw domain_error("connection arrow has wrong endpoints");
    }
    // fill diagonal and inverses; verify symmetry when both directions given
    for (int x = 0; x < space_->size(); ++x)
        for (int y = 0; y < space_->size(); ++y) {
            if (!space_->nbr(x, y)) continue;
            auto fwd = vals_.find({x, y});
            auto bwd = vals_.find({y, x});
            if (x == y) {
                if (fwd != vals_.end() && fwd->second != phi_->identity(x))
                    throw domain_error("connection must be the identity on the diagonal");
                vals_[{x, x}] = phi_->identity(x);
                continue;
            }
            if (fwd != vals_.end() && bwd != vals_.end()) {
                if (phi_->inverse(fwd->second) != bwd->second)
                    throw domain_error("connection breaks nabla(y,x) = nabla(x,y)^-1");
            } else if (fwd != vals_.end()) {
                vals_[{y, x}] = phi_->inverse(fwd->second);
            } else if (bwd != vals_.end()) {
                vals_[{x, y}] = phi_->inverse(bwd->second);
            } else {
                throw usage_error("groupoid connection misses a neighbour pair");
            }
        }
}

int GroupoidConnection::transport(int x, int y) const {
    auto it = vals_.find({x, y});
    if (it == vals_.end()) throw usage_error("transport on a non-neighbour pair");
    return it->second;
}

int curvature(const GroupoidConnection& c, int x, int y, int z) {
    require_simplex2(*c.space(), x, y, z);
    const auto& phi = *c.groupoid();
    return phi.compose(phi.compose(c.transport(x, y), c.transport(y, z)), c.transport(z, x));
}

bool bianchi_check(const GroupoidConnection& c, int x, int y, int z, int u) {
    require_simplex3(*c.space(), x, y, z, u);
    const auto& phi = *c.groupoid();
    int r_yzu = curvature(c, y, z, u); // lives in Phi(y,y)
    int h = c.transport(y, x);
    int conj = phi.compose(phi.compose(phi.inverse(h), r_yzu), h); // now in Phi(x,x)
    int lhs = phi.compose(conj, curvature(c, x, y, u));
    lhs = phi.compose(lhs, curvature(c, x, u, z));
    lhs = phi.compose(lhs, curvature(c, x, z, y));
    return lhs == phi.identity(x);
}

// ---------------------------------------------------------------------------
// affine connections
// ---------------------------------------------------------------------------

AffineConnection::AffineConnection(SpacePtr m, std::map<std::vector<int>, int> table)
    : space_(std::move(m)), table_(std::move(table)) {
    for (const auto& [key, w] : table_) {
        if (key.size() != 3) throw usage_error("lambda keys are triples");
        int x = key[0], y = key[1], z = key[2];
        if (x < 0 || y < 0 || z < 0 || x >= space_->size() || y >= space_->size() ||
            z >= space_->size() || w < 0 || w >= space_->size())
            throw usage_error("lambda entry out of range");
        if (!space_->nbr(x, y) || !space_->nbr(x, z))
            throw usage_error("lambda defined off its domain (needs x~y and x~z)");
        if (!space_->nbr(y, w) || !space_->nbr(z, w))
            throw domain_error("lambda(x,y,z) must be a neighbour of y and of z");
        if (x == y && w != z) throw domain_error("lambda(x,x,z) = z is violated");
        if (x == z && w != y) throw domain_error("lambda(x,y,x) = y is violated");
    }
}

std::optional<int> AffineConnection::lambda(int x, int y, int z) const {
    if (!space_->nbr(x, y) || !space_->nbr(x, z))
        throw usage_error("lambda queried off its domain");
    if (x == y) return z;
    if (x == z) return y;
    auto it = table_.find({x, y, z});
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

int AffineConnection::lambda_or_throw(int x, int y, int z) const {
    auto v = lambda(x, y, z);
    if (!v) throw domain_error("connection not transportable on this model");
    return *v;
}

bool AffineConnection::symmetric() const {
    for (const auto& [key, w] : table_) {
        auto other = lambda(key[0], key[2], key[1]);
        if (other && *other != w) return false;
    }
    return true;
}

AffineConnection AffineConnection::group_translation(const GroupPtr& g) {
    int n = g->size();
    std::vector<std::string> points;
    for (int i = 0; i < n; ++i) points.push_back(g->name(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    SpacePtr total = make_space(std::move(points), edges);
    std::map<std::vector<int>, int> table;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) table[{x, y, z}] = g->mul(g->mul(z, g->inv(x)), y);
    return AffineConnection(total, std::move(table));
}

AffineCurvatureResult affine_curvature(const AffineConnection& c, int x0, int x1, int x2) {
    require_simplex2(*c.space(), x0, x1, x2);
    AffineCurvatureResult out;
    out.bijection_fixing_base = true;
    std::vector<int> seen;
    for (int z : c.space()->monad(x0)) {
        int z1 = c.lambda_or_throw(x0, x1, z);
        int z2 = c.lambda_or_throw(x1, x2, z1);
        int z3 = c.lambda_or_throw(x2, x0, z2);
        out.transport.push_back({z, z3});
        if (!c.space()->nbr(x0, z3)) out.bijection_fixing_base = false;
        if (z == x0 && z3 != x0) out.bijection_fixing_base = false;
        seen.push_back(z3);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        out.bijection_fixing_base = false;
    return out;
}

bool is_geodesic(const AffineConnection& c, const std::vector<int>& subset) {
    if (!c.symmetric())
        throw domain_error("geodesics are defined for torsion-free connections");
    for (int x : subset)
        if (x < 0 || x >= c.space()->size()) throw usage_error("subset index out of range");
    for (int x : subset)
        for (int y : subset) {
            if (!c.space()->nbr(x, y)) continue;
            for (int z : subset) {
                if (!c.space()->nbr(x, z)) continue;
                int w = c.lambda_or_throw(x, y, z);
                if (std::find(subset.begin(), subset.end(), w) == subset.end()) return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// bundle connections
// ---------------------------------------------------------------------------

BundleConnection::BundleConnection(SpacePtr m, std::vector<std::string> total_points,
                                   std::vector<int> proj,
                                   std::map<std::pair<int, int>, std::map<int, int>> transports)
    : space_(std::move(m)), total_(std::move(total_points)), proj_(std::move(proj)),
      transports_(std::move(transports)) {
    if (total_.size() != proj_.size()) throw usage_error("projection table size mismatch");
    for (int p : proj_)
        if (p < 0 || p >= space_->size()) throw usage_error("projection out of range");
    for (int x = 0; x < space_->size(); ++x)
        for (int y = 0; y < space_->size(); ++y) {
            if (!space_->nbr(x, y)) continue;
            if (x == y) continue; // identity action is implicit
            auto it = transports_.find({x, y});
            if (it == transports_.end())
                throw usage_error("bundle connection misses the pair (" + std::to_string(x) +
                                  "," + std::to_string(y) + ")");
            for (int e : fiber(x)) {
                auto jt = it->second.find(e);
                if (jt == it->second.end())
                    throw usage_error("bundle transport misses a fiber element");
                if (projection(jt->second) != y)
                    throw domain_error("bundle transport leaves the target fiber");
            }
        }
    // round trips are the identity
    for (const auto& [key, fwd] : transports_) {
        auto [x, y] = key;
        for (const auto& [e, img] : fwd)
            if (transport(y, x, img) != e)
                throw domain_error("bundle transport round trip is not the identity");
    }
}

std::vector<int> BundleConnection::fiber(int x) const {
    std::vector<int> out;
    for (int e = 0; e < total_size(); ++e)
        if (projection(e) == x) out.push_back(e);
    return out;
}

int BundleConnection::transport(int x, int y, int e) const {
    if (projection(e) != x) throw domain_error("element does not lie in the fiber over x");
    if (!space_->nbr(x, y)) throw usage_error("transport along a non-neighbour pair");
    if (x == y) return e;
    auto it = transports_.find({x, y});
    auto jt = it->second.find(e);
    return jt->second;
}

BundleConnection BundleConnection::from_affine(const AffineConnection& c) {
    const SpacePtr& m = c.space();
    // E = M_(1): pairs (x, z) with x ~ z, projected to x
    std::vector<std::string> total;
    std::vector<int> proj;
    std::map<std::pair<int, int>, int> index;
    for (int x = 0; x < m->size(); ++x)
        for (int z : m->monad(x)) {
            index[{x, z}] = static_cast<int>(total.size());
            total.push_back("(" + m->point_name(x) + "," + m->point_name(z) + ")");
            proj.push_back(x);
        }
    std::map<std::pair<int, int>, std::map<int, int>> transports;
    for (int x = 0; x < m->size(); ++x)
        for (int y : m->monad(x)) {
            if (x == y) continue;
            std::map<int, int> fwd;
            for (int z : m->monad(x)) fwd[index.at({x, z})] = index.at({y, c.lambda_or_throw(x, y, z)});
            transports[{x, y}] = std::move(fwd);
        }
    return BundleConnection(m, std::move(total), std::move(proj), std::move(transports));
}

} // namespace sdg
