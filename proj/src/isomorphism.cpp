#include <algorithm>
#include <map>

#include "tamarib/poset.hpp"

namespace tamarib {

namespace {

using Colors = std::vector<std::size_t>;

// Joint colour refinement over both posets so that colour ids are comparable.
// Start from a degree/level signature, then repeatedly split by the multisets
// of neighbour colours along upper and lower covers.
std::pair<Colors, Colors> refine(const Poset& p, const Poset& q) {
    using Signature = std::vector<std::size_t>;
    auto initial = [](const Poset& x) {
        const auto lo = level_map(x, LevelMode::lowest).level;
        const auto hi = height_above(x);
        std::vector<Signature> sig(x.size());
        for (Index v = 0; v < x.size(); ++v) {
            sig[v] = {static_cast<std::size_t>(lo[v]), static_cast<std::size_t>(hi[v]), x.down_set(v).count(),
                      x.up_set(v).count(), x.lower_covers(v).size(), x.upper_covers(v).size()};
        }
        return sig;
    };

    auto assign = [](const std::vector<Signature>& a, const std::vector<Signature>& b) {
        std::map<Signature, std::size_t> ids;
        for (const auto& s : a) ids.emplace(s, 0);
        for (const auto& s : b) ids.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, id] : ids) id = next++;
        Colors ca, cb;
        for (const auto& s : a) ca.push_back(ids[s]);
        for (const auto& s : b) cb.push_back(ids[s]);
        return std::tuple{ca, cb, next};
    };

    auto [cp, cq, classes] = assign(initial(p), initial(q));
    for (;;) {
        auto step = [](const Poset& x, const Colors& c) {
            std::vector<Signature> sig(x.size());
            for (Index v = 0; v < x.size(); ++v) {
                Signature up, down;
                for (Index w : x.upper_covers(v)) up.push_back(c[w]);
                for (Index w : x.lower_covers(v)) down.push_back(c[w]);
                std::sort(up.begin(), up.end());
                std::sort(down.begin(), down.end());
                Signature s{c[v], up.size()};
                s.insert(s.end(), up.begin(), up.end());
                s.insert(s.end(), down.begin(), down.end());
                sig[v] = std::move(s);
            }
            return sig;
        };
        auto [np, nq, next_classes] = assign(step(p, cp), step(q, cq));
        cp = std::move(np);
        cq = std::move(nq);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return {cp, cq};
}

class Matcher {
public:
    Matcher(const Poset& p, const Poset& q, Colors cp, Colors cq)
        : p_(p), q_(q), cp_(std::move(cp)), cq_(std::move(cq)), map_(p.size(), kUnset),
          used_(q.size(), false) {
        order_ = p.linear_extension();
        // Within a colour class, try candidates in index order.
        for (Index y = 0; y < q.size(); ++y) by_color_[cq_[y]].push_back(y);
    }

    bool run(std::size_t depth = 0) {
        if (depth == order_.size()) return true;
        const Index x = order_[depth];
        auto it = by_color_.find(cp_[x]);
        if (it == by_color_.end()) return false;
        for (Index y : it->second) {
            if (used_[y] || !consistent(depth, x, y)) continue;
            map_[x] = y;
            used_[y] = true;
            if (run(depth + 1)) return true;
            used_[y] = false;
            map_[x] = kUnset;
        }
        return false;
    }

    const std::vector<Index>& mapping() const { return map_; }

private:
    static constexpr Index kUnset = static_cast<Index>(-1);

    bool consistent(std::size_t depth, Index x, Index y) const {
        for (std::size_t i = 0; i < depth; ++i) {
            const Index a = order_[i];
            const Index b = map_[a];
            if (p_.leq(a, x) != q_.leq(b, y) || p_.leq(x, a) != q_.leq(y, b)) return false;
        }
        return true;
    }

    const Poset& p_;
    const Poset& q_;
    Colors cp_, cq_;
    std::vector<Index> order_;
    std::vector<Index> map_;
    std::vector<bool> used_;
    std::map<std::size_t, std::vector<Index>> by_color_;
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.covers().size() != q.covers().size() ||
        p.strict_relation_count() != q.strict_relation_count())
        return std::nullopt;

    auto [cp, cq] = refine(p, q);
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;

    Matcher m(p, q, std::move(cp), std::move(cq));
    if (!m.run()) return std::nullopt;
    return m.mapping();
}

bool is_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

}  // namespace tamarib
