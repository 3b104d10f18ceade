#include "tamarib/gk.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "chain_flow.hpp"

namespace tamarib {

std::size_t GKPartition::sum() const { return prefix_sum(parts.size()); }

std::size_t GKPartition::prefix_sum(std::size_t k) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < std::min(k, parts.size()); ++i) s += parts[i];
    return s;
}

std::vector<std::size_t> GKPartition::conjugate() const {
    std::vector<std::size_t> out;
    if (parts.empty()) return out;
    for (std::size_t j = 1; j <= parts.front(); ++j) {
        std::size_t c = 0;
        for (auto part : parts)
            if (part >= j) ++c;
        out.push_back(c);
    }
    return out;
}

ChainFamily max_k_chain_union(const Poset& p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    ChainFamily out;
    if (p.size() > 0) {
        detail::ChainFlow flow(p);
        while (flow.flow_value() < k && flow.next_gain() > 0) flow.augment();
        out.chains = flow.decompose();
        out.total = static_cast<std::size_t>(flow.total_gain());
    }
    out.chains.resize(k);
    return out;
}

GKPartition gk_partition(const Poset& p) {
    GKPartition out;
    if (p.size() == 0) return out;
    detail::ChainFlow flow(p);
    for (;;) {
        const auto gain = flow.next_gain();
        if (gain <= 0) break;
        if (!out.parts.empty() && static_cast<std::size_t>(gain) > out.parts.back())
            throw std::logic_error("Greene-Kleitman parts increased; flow solver invariant broken");
        out.parts.push_back(static_cast<std::size_t>(gain));
        flow.augment();
    }
    if (out.sum() != p.size()) throw std::logic_error("Greene-Kleitman parts do not sum to the poset size");
    return out;
}

// With the optimal chain flow for cost-per-chain k in hand, the shortest
// distances d of its residual circulation are optimal dual potentials.
// They never increase along the order and drop by at most k from source to
// sink, so the elements with d(v_in) > d(v_out) meet every chain at most k
// times; complementary slackness makes that set as large as possible.
AntichainFamily max_k_antichain_union(const Poset& p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    AntichainFamily out;
    if (p.size() > 0) {
        detail::ChainFlow flow(p);
        const auto cost = static_cast<std::int64_t>(k);
        while (flow.next_gain() > cost) flow.augment();
        const auto dist = flow.circulation_distances(cost);

        std::vector<Index> members;
        for (Index v = 0; v < p.size(); ++v)
            if (dist[detail::ChainFlow::in_node(v)] > dist[detail::ChainFlow::out_node(v)]) members.push_back(v);

        const Poset sub = induced_subposet(p, members);
        const auto levels = level_map(sub, LevelMode::lowest).fibers();
        if (levels.size() > k) throw std::logic_error("antichain dual set has a chain longer than k");
        for (const auto& fiber : levels) {
            std::vector<Index> antichain;
            for (Index i : fiber) antichain.push_back(members[i]);
            out.antichains.push_back(std::move(antichain));
        }
        out.total = members.size();
    }
    out.antichains.resize(k);
    return out;
}

std::size_t oracle_k_chain_union(const Poset& p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (p.size() > kOracleMaxElements || k > kOracleMaxChains)
        throw std::invalid_argument("oracle limited to " + std::to_string(kOracleMaxElements) + " elements and " +
                                    std::to_string(kOracleMaxChains) + " chains");

    // Scan a linear extension; each element either joins a chain whose top is
    // below it or stays out. State = position plus the multiset of chain tops.
    const auto& order = p.linear_extension();
    const Index none = p.size();
    std::map<std::pair<std::size_t, std::vector<Index>>, std::size_t> memo;
    auto best = [&](auto& self, std::size_t pos, std::vector<Index> tops) -> std::size_t {
        if (pos == order.size()) return 0;
        std::sort(tops.begin(), tops.end());
        const auto key = std::pair{pos, tops};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const Index v = order[pos];
        std::size_t result = self(self, pos + 1, tops);
        for (std::size_t c = 0; c < tops.size(); ++c) {
            if (c > 0 && tops[c] == tops[c - 1]) continue;
            if (tops[c] != none && !p.less(tops[c], v)) continue;
            auto next = tops;
            next[c] = v;
            result = std::max(result, 1 + self(self, pos + 1, std::move(next)));
        }
        memo.emplace(key, result);
        return result;
    };
    return best(best, 0, std::vector<Index>(k, none));
}

std::size_t oracle_k_antichain_union(const Poset& p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (p.size() > kOracleMaxElements)
        throw std::invalid_argument("oracle limited to " + std::to_string(kOracleMaxElements) + " elements");
    const std::size_t n = p.size();
    const auto& order = p.linear_extension();
    std::size_t best = 0;
    std::vector<std::size_t> longest(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        std::size_t height = 0;
        for (std::size_t a = 0; a < n; ++a) {
            const Index v = order[a];
            longest[v] = 0;
            if (!(mask >> v & 1U)) continue;
            std::size_t below = 0;
            for (std::size_t b = 0; b < a; ++b)
                if ((mask >> order[b] & 1U) && p.less(order[b], v)) below = std::max(below, longest[order[b]]);
            longest[v] = below + 1;
            height = std::max(height, longest[v]);
        }
        if (height <= k) best = size;
    }
    return best;
}

bool is_chain(const Poset& p, const std::vector<Index>& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!p.less(chain[i - 1], chain[i])) return false;
    return true;
}

bool is_antichain(const Poset& p, const std::vector<Index>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (p.comparable(set[i], set[j])) return false;
    return true;
}

bool pairwise_disjoint(const std::vector<std::vector<Index>>& sets, std::size_t universe) {
    std::vector<bool> seen(universe, false);
    for (const auto& s : sets) {
        for (Index v : s) {
            if (v >= universe || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

}  // namespace tamarib
