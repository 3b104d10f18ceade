#include "tamarib/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tamarib {

namespace {

std::string witness_text(const std::vector<std::string>& labels, std::initializer_list<Index> idx) {
    std::string s;
    for (auto i : idx) {
        if (!s.empty()) s += ", ";
        s += labels[i];
    }
    return s;
}

}  // namespace

Poset Poset::build(std::vector<std::string> labels, const LeqFn& leq) {
    const std::size_t n = labels.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            if (leq(u, v)) up[u].set(v);

    for (Index u = 0; u < n; ++u) {
        if (!up[u].test(u))
            throw OrderViolation(OrderViolation::Kind::reflexivity, {u},
                                 "relation is not reflexive at " + witness_text(labels, {u}));
    }
    for (Index u = 0; u < n; ++u) {
        for (Index v = u + 1; v < n; ++v) {
            if (up[u].test(v) && up[v].test(u))
                throw OrderViolation(OrderViolation::Kind::antisymmetry, {u, v},
                                     "relation is not antisymmetric: " + witness_text(labels, {u, v}));
        }
    }
    for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
            if (!up[u].test(v) || up[v].is_subset_of(up[u])) continue;
            Index w = 0;
            while (!(up[v].test(w) && !up[u].test(w))) ++w;
            throw OrderViolation(OrderViolation::Kind::transitivity, {u, v, w},
                                 "relation is not transitive: " + witness_text(labels, {u, v, w}));
        }
    }
    return Poset(std::move(labels), std::move(up));
}

Poset Poset::from_relations(std::vector<std::string> labels, std::span<const Cover> relations) {
    const std::size_t n = labels.size();
    std::vector<std::vector<Index>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [u, v] : relations) {
        if (u >= n || v >= n) throw std::invalid_argument("relation index out of range");
        if (u == v) throw std::invalid_argument("relation contains a loop at " + labels[u]);
        succ[u].push_back(v);
        ++indegree[v];
    }

    // Kahn's algorithm; leftover vertices sit on a cycle.
    std::vector<Index> topo;
    topo.reserve(n);
    std::queue<Index> ready;
    for (Index v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    while (!ready.empty()) {
        Index u = ready.front();
        ready.pop();
        topo.push_back(u);
        for (Index v : succ[u])
            if (--indegree[v] == 0) ready.push(v);
    }
    if (topo.size() != n) throw std::invalid_argument("relation contains a cycle");

    std::vector<Bitset> up(n, Bitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        up[*it].set(*it);
        for (Index v : succ[*it]) up[*it] |= up[v];
    }
    return Poset(std::move(labels), std::move(up));
}

Poset::Poset(std::vector<std::string> labels, std::vector<Bitset> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
    const std::size_t n = labels_.size();
    down_.assign(n, Bitset(n));
    for (Index u = 0; u < n; ++u) up_[u].for_each([&](Index v) { down_[v].set(u); });

    // u < v implies |down(u)| < |down(v)|, so sorting by down-set size is a
    // linear extension.
    std::vector<std::size_t> below(n);
    for (Index v = 0; v < n; ++v) below[v] = down_[v].count();
    linear_extension_.resize(n);
    std::iota(linear_extension_.begin(), linear_extension_.end(), Index{0});
    std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                     [&](Index a, Index b) { return below[a] < below[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[linear_extension_[i]] = i;

    // Upper covers of u are the minimal elements of the strict up-set; walk the
    // strict up-set in linear-extension order and drop anything already above
    // an accepted cover.
    upper_covers_.assign(n, {});
    lower_covers_.assign(n, {});
    for (Index u = 0; u < n; ++u) {
        std::vector<Index> above;
        up_[u].for_each([&](Index v) {
            if (v != u) above.push_back(v);
        });
        std::sort(above.begin(), above.end(), [&](Index a, Index b) { return position[a] < position[b]; });
        Bitset dominated(n);
        for (Index v : above) {
            if (dominated.test(v)) continue;
            upper_covers_[u].push_back(v);
            dominated |= up_[v];
        }
        std::sort(upper_covers_[u].begin(), upper_covers_[u].end());
        for (Index v : upper_covers_[u]) {
            covers_.emplace_back(u, v);
            lower_covers_[v].push_back(u);
        }
    }
    for (auto& lc : lower_covers_) std::sort(lc.begin(), lc.end());
}

std::size_t Poset::strict_relation_count() const {
    std::size_t c = 0;
    for (const auto& b : up_) c += b.count() - 1;
    return c;
}

int LevelAssignment::max_level() const {
    return level.empty() ? -1 : *std::max_element(level.begin(), level.end());
}

std::vector<std::vector<Index>> LevelAssignment::fibers() const {
    std::vector<std::vector<Index>> out(static_cast<std::size_t>(max_level() + 1));
    for (Index v = 0; v < level.size(); ++v) out[static_cast<std::size_t>(level[v])].push_back(v);
    return out;
}

namespace {

std::vector<int> depth_below(const Poset& p) {
    std::vector<int> depth(p.size(), 0);
    for (Index v : p.linear_extension())
        for (Index u : p.lower_covers(v)) depth[v] = std::max(depth[v], depth[u] + 1);
    return depth;
}

}  // namespace

std::vector<int> height_above(const Poset& p) {
    std::vector<int> height(p.size(), 0);
    const auto& ext = p.linear_extension();
    for (auto it = ext.rbegin(); it != ext.rend(); ++it)
        for (Index w : p.upper_covers(*it)) height[*it] = std::max(height[*it], height[w] + 1);
    return height;
}

int longest_chain_length(const Poset& p) {
    auto depth = depth_below(p);
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

LevelAssignment level_map(const Poset& p, LevelMode mode) {
    if (mode == LevelMode::shifted) return shifted_level_map(p);
    if (mode == LevelMode::lowest) return {depth_below(p), LevelMode::lowest};
    const int top = longest_chain_length(p);
    auto height = height_above(p);
    for (auto& h : height) h = top - h;
    return {std::move(height), LevelMode::highest};
}

LeveledSubposet leveled_subposet(const Poset& p) {
    const auto depth = depth_below(p);
    const auto height = height_above(p);
    const int top = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    LeveledSubposet out;
    for (Index v = 0; v < p.size(); ++v) {
        if (depth[v] + height[v] == top) {
            out.members.push_back(v);
            out.levels.push_back(depth[v]);
        }
    }
    return out;
}

LevelAssignment shifted_level_map(const Poset& p) {
    auto depth = depth_below(p);
    const auto leveled = leveled_subposet(p);
    std::vector<bool> is_leveled(p.size(), false);
    for (Index v : leveled.members) is_leveled[v] = true;
    for (Index v = 0; v < p.size(); ++v)
        if (!is_leveled[v]) ++depth[v];
    return {std::move(depth), LevelMode::shifted};
}

bool fibers_are_antichains(const Poset& p, const LevelAssignment& levels) {
    for (Index u = 0; u < p.size(); ++u) {
        bool ok = true;
        p.up_set(u).for_each([&](Index v) {
            if (v != u && levels.level[v] == levels.level[u]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool satisfies_leveled_condition(const Poset& p, const LeveledSubposet& sub) {
    if (sub.members.empty()) return true;
    const Poset q = induced_subposet(p, sub.members);
    const int lo = *std::min_element(sub.levels.begin(), sub.levels.end());
    const int hi = *std::max_element(sub.levels.begin(), sub.levels.end());
    for (Index i = 0; i < q.size(); ++i) {
        const int l = sub.levels[i];
        if (l != hi) {
            const auto& up = q.upper_covers(i);
            if (std::none_of(up.begin(), up.end(), [&](Index j) { return sub.levels[j] == l + 1; }))
                return false;
        }
        if (l != lo) {
            const auto& down = q.lower_covers(i);
            if (std::none_of(down.begin(), down.end(), [&](Index j) { return sub.levels[j] == l - 1; }))
                return false;
        }
    }
    return true;
}

Poset induced_subposet(const Poset& p, std::span<const Index> members) {
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (Index v : members) labels.push_back(p.label(v));
    return Poset::build(std::move(labels), [&](Index a, Index b) { return p.leq(members[a], members[b]); });
}

Poset dual(const Poset& p) {
    return Poset::build(p.labels(), [&](Index a, Index b) { return p.leq(b, a); });
}

}  // namespace tamarib
