#include "chain_flow.hpp"

#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tamarib::detail {

namespace {
constexpr std::int64_t kUnlimited = std::int64_t{1} << 40;
constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;
}  // namespace

ChainFlow::ChainFlow(const Poset& p) : poset_(p), adj_(2 + 2 * p.size()), profit_arc_(p.size()) {
    for (Index v = 0; v < p.size(); ++v) {
        add_arc(source, in_node(v), kUnlimited, 0);
        profit_arc_[v] = adj_[in_node(v)].size();
        add_arc(in_node(v), out_node(v), 1, -1);
        add_arc(in_node(v), out_node(v), kUnlimited, 0);
        for (Index w : p.upper_covers(v)) add_arc(out_node(v), in_node(w), kUnlimited, 0);
        add_arc(out_node(v), sink, kUnlimited, 0);
    }
    init_potentials();
}

void ChainFlow::add_arc(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    adj_[from].push_back({to, adj_[to].size(), cap, cost, cap});
    adj_[to].push_back({from, adj_[from].size() - 1, 0, -cost, 0});
}

// The empty-flow residual network is acyclic, so one pass in topological
// order yields exact distances despite the negative unit arcs.
void ChainFlow::init_potentials() {
    potential_.assign(adj_.size(), kUnreached);
    potential_[source] = 0;
    std::vector<std::size_t> order{source};
    for (Index v : poset_.linear_extension()) {
        order.push_back(in_node(v));
        order.push_back(out_node(v));
    }
    for (std::size_t node : order) {
        if (potential_[node] == kUnreached) continue;
        for (const Arc& a : adj_[node])
            if (a.cap > 0 && potential_[node] + a.cost < potential_[a.to])
                potential_[a.to] = potential_[node] + a.cost;
    }
    if (potential_[sink] == kUnreached) potential_[sink] = 0;
}

std::int64_t ChainFlow::next_gain() {
    if (path_ready_) return -path_cost_;
    const std::size_t n = adj_.size();
    std::vector<std::int64_t> dist(n, kUnreached);
    parent_.assign(n, {n, 0});
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
        auto [d, node] = queue.top();
        queue.pop();
        if (d != dist[node]) continue;
        for (std::size_t i = 0; i < adj_[node].size(); ++i) {
            const Arc& a = adj_[node][i];
            if (a.cap <= 0) continue;
            const std::int64_t nd = d + a.cost + potential_[node] - potential_[a.to];
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                parent_[a.to] = {node, i};
                queue.emplace(nd, a.to);
            }
        }
    }
    if (dist[sink] == kUnreached) throw std::logic_error("chain flow: sink unreachable");
    for (std::size_t node = 0; node < n; ++node)
        if (dist[node] != kUnreached) potential_[node] += dist[node];
    path_cost_ = potential_[sink] - potential_[source];
    path_ready_ = true;
    return -path_cost_;
}

void ChainFlow::augment() {
    if (!path_ready_) next_gain();
    for (std::size_t node = sink; node != source;) {
        auto [prev, i] = parent_[node];
        Arc& a = adj_[prev][i];
        a.cap -= 1;
        adj_[a.to][a.rev].cap += 1;
        node = prev;
    }
    ++flow_value_;
    total_gain_ -= path_cost_;
    path_ready_ = false;
}

int ChainFlow::element_flow(Index v) const {
    const Arc& a = adj_[in_node(v)][profit_arc_[v]];
    return static_cast<int>(a.capacity - a.cap);
}

std::vector<std::vector<Index>> ChainFlow::decompose() const {
    // Remaining flow per forward arc; the network is a DAG so every walk from
    // the source following positive flow ends at the sink.
    std::vector<std::vector<std::int64_t>> flow(adj_.size());
    for (std::size_t node = 0; node < adj_.size(); ++node)
        for (const Arc& a : adj_[node]) flow[node].push_back(a.capacity > 0 ? a.capacity - a.cap : 0);

    std::vector<std::vector<Index>> paths;
    for (std::size_t unit = 0; unit < flow_value_; ++unit) {
        std::vector<Index> collected;
        std::size_t node = source;
        while (node != sink) {
            std::size_t next = adj_[node].size();
            for (std::size_t i = 0; i < adj_[node].size(); ++i) {
                if (flow[node][i] > 0) {
                    next = i;
                    break;
                }
            }
            if (next == adj_[node].size()) throw std::logic_error("chain flow: broken decomposition");
            --flow[node][next];
            const Arc& a = adj_[node][next];
            if (node >= 2 && node % 2 == 0 && a.cost == -1) collected.push_back((node - 2) / 2);
            node = a.to;
        }
        paths.push_back(std::move(collected));
    }
    return paths;
}

std::vector<std::int64_t> ChainFlow::circulation_distances(std::int64_t k) const {
    const std::size_t n = adj_.size();
    std::vector<std::int64_t> dist(n, kUnreached);
    std::vector<bool> queued(n, false);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    queued[source] = true;
    std::size_t relaxations = 0;
    auto relax = [&](std::size_t to, std::int64_t nd) {
        if (nd >= dist[to]) return;
        dist[to] = nd;
        if (!queued[to]) {
            queued[to] = true;
            queue.push_back(to);
        }
    };
    while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop_front();
        queued[node] = false;
        if (++relaxations > n * n * 4 + 16) throw std::logic_error("chain flow: negative cycle in residual network");
        for (const Arc& a : adj_[node])
            if (a.cap > 0) relax(a.to, dist[node] + a.cost);
        if (node == sink) relax(source, dist[node] + k);
        if (node == source && flow_value_ > 0) relax(sink, dist[node] - k);
    }
    return dist;
}

std::vector<std::int64_t> ChainFlow::arc_flows() const {
    std::vector<std::int64_t> out;
    for (const auto& arcs : adj_)
        for (const Arc& a : arcs)
            if (a.capacity > 0) out.push_back(a.capacity - a.cap);
    return out;
}

std::vector<std::int64_t> ChainFlow::arc_capacities() const {
    std::vector<std::int64_t> out;
    for (const auto& arcs : adj_)
        for (const Arc& a : arcs)
            if (a.capacity > 0) out.push_back(a.capacity);
    return out;
}

}  // namespace tamarib::detail
