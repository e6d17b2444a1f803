#include "sdg/group.hpp"

#include <algorithm>
#include <numeric>

namespace sdg {

FiniteGroup::FiniteGroup(std::string label, std::vector<std::string> names,
                         std::vector<std::vector<int>> table)
    : label_(std::move(label)), names_(std::move(names)), table_(std::move(table)) {
    int n = size();
    if (n == 0) throw usage_error("empty group");
    if (static_cast<int>(table_.size()) != n) throw usage_error("group table is not square");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw usage_error("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw usage_error("group table entry out of range");
    }
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            id_ = e;
            break;
        }
    }
    if (id_ < 0) throw domain_error("group table has no identity");
    inv_.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) inv_[static_cast<size_t>(a)] = b;
        if (inv_[static_cast<size_t>(a)] < 0) throw domain_error("group element has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw domain_error("group table is not associative");
}

int FiniteGroup::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw usage_error("unknown element '" + name + "' of group " + label_);
    return static_cast<int>(it - names_.begin());
}

bool FiniteGroup::abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw usage_error("cyclic group needs n >= 1");
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    return std::make_shared<FiniteGroup>("Z" + std::to_string(n), std::move(names),
                                         std::move(table));
}

namespace {

GroupPtr from_permutations(std::string label, const std::vector<std::vector<int>>& perms) {
    auto name_of = [](const std::vector<int>& p) {
        std::string s;
        for (int v : p) s += static_cast<char>('0' + v);
        return s;
    };
    std::vector<std::string> names;
    for (const auto& p : perms) names.push_back(name_of(p));
    int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // left-to-right: apply a, then b
            std::vector<int> comp(perms[static_cast<size_t>(a)].size());
            for (size_t i = 0; i < comp.size(); ++i)
                comp[i] = perms[static_cast<size_t>(b)]
                               [static_cast<size_t>(perms[static_cast<size_t>(a)][i])];
            auto it = std::find(names.begin(), names.end(), name_of(comp));
            if (it == names.end()) throw domain_error("permutation set is not closed");
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<int>(it - names.begin());
        }
    }
    return std::make_shared<FiniteGroup>(std::move(label), std::move(names), std::move(table));
}

} // namespace

GroupPtr symmetric_group(int n) {
    if (n != 3 && n != 4) throw usage_error("symmetric_group supports n = 3 or 4");
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return from_permutations("S" + std::to_string(n), perms);
}

GroupPtr dihedral4_group() {
    std::vector<std::vector<int>> perms;
    std::vector<int> rot{1, 2, 3, 0};
    std::vector<int> cur{0, 1, 2, 3};
    std::vector<std::string> names;
    for (int k = 0; k < 4; ++k) {
        perms.push_back(cur);
        names.push_back("r" + std::to_string(k));
        std::vector<int> next(4);
        for (int i = 0; i < 4; ++i) next[static_cast<size_t>(i)] = rot[static_cast<size_t>(cur[static_cast<size_t>(i)])];
        cur = next;
    }
    std::vector<int> refl{0, 3, 2, 1};
    cur = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
        std::vector<int> s(4);
        for (int i = 0; i < 4; ++i) s[static_cast<size_t>(i)] = refl[static_cast<size_t>(perms[static_cast<size_t>(k)][static_cast<size_t>(i)])];
        perms.push_back(s);
        names.push_back("s" + std::to_string(k));
    }
    auto g = from_permutations("D4", perms);
    // rebuild with the conventional names
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = g->mul(a, b);
    return std::make_shared<FiniteGroup>("D4", std::move(names), std::move(table));
}

GroupPtr quaternion_group() {
    // indices: 1, -1, i, -i, j, -j, k, -k
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto axis = [](int idx) { return idx / 2; };  // 0 scalar, 1 i, 2 j, 3 k
    auto sign = [](int idx) { return idx % 2 == 0 ? 1 : -1; };
    auto encode = [](int ax, int sg) { return ax * 2 + (sg < 0 ? 1 : 0); };
    auto mul_axes = [](int a, int b, int& sgn) -> int {
        // quaternion unit products; sgn accumulates the sign
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) {
            sgn = -sgn;
            return 0;
        }
        // i*j=k, j*k=i, k*i=j and anticommutativity
        static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        static const int psgn[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
        sgn *= psgn[a][b];
        return prod[a][b];
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            int sgn = sign(x) * sign(y);
            int ax = mul_axes(axis(x), axis(y), sgn);
            table[static_cast<size_t>(x)][static_cast<size_t>(y)] = encode(ax, sgn);
        }
    }
    return std::make_shared<FiniteGroup>("Q8", std::move(names), std::move(table));
}

GroupPtr named_group(const std::string& name) {
    if (name == "S3") return symmetric_group(3);
    if (name == "S4") return symmetric_group(4);
    if (name == "D4") return dihedral4_group();
    if (name == "Q8") return quaternion_group();
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = std::stoi(name.substr(1));
        if (n < 1 || n > 12) throw usage_error("built-in cyclic groups range over Z1..Z12");
        return cyclic_group(n);
    }
    throw usage_error("unknown group '" + name + "'");
}

} // namespace sdg
