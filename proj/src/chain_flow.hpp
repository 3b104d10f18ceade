#pragma once

// Min-cost flow network for packing chains.
//
// Every element v becomes v_in -> v_out with a unit arc of cost -1 (collect v)
// next to a zero-cost bypass of unlimited capacity (pass through v without
// collecting it). Cover arcs u_out -> v_in, source -> v_in and v_out -> sink
// are all free and unlimited. One unit of s-t flow is one chain; the elements
// whose unit arc carries flow are the collected ones. Bypasses let a path hop
// across already-collected elements, so cover arcs reach every strict relation.

#include <cstdint>
#include <vector>

#include "tamarib/poset.hpp"

namespace tamarib::detail {

class ChainFlow {
public:
    explicit ChainFlow(const Poset& p);

    /// Finds the cheapest s-t path in the residual network. Returns its gain
    /// (number of newly collected elements, i.e. minus its cost) without
    /// augmenting. The result is cached until augment() is called.
    std::int64_t next_gain();

    /// Pushes one unit along the path found by next_gain().
    void augment();

    std::size_t flow_value() const { return flow_value_; }
    std::int64_t total_gain() const { return total_gain_; }

    /// Splits the current flow into unit paths; one collected-element list per path.
    std::vector<std::vector<Index>> decompose() const;

    /// Exact shortest distances from the source in the residual network of
    /// the circulation obtained by adding a sink -> source arc of cost `k`.
    std::vector<std::int64_t> circulation_distances(std::int64_t k) const;

    /// Flow on the unit arc of element v (0 or 1).
    int element_flow(Index v) const;
    /// Every arc flow, in insertion order.
    std::vector<std::int64_t> arc_flows() const;
    /// Capacity of each arc, parallel to arc_flows().
    std::vector<std::int64_t> arc_capacities() const;

    static constexpr std::size_t source = 0;
    static constexpr std::size_t sink = 1;
    static std::size_t in_node(Index v) { return 2 + 2 * v; }
    static std::size_t out_node(Index v) { return 3 + 2 * v; }

private:
    struct Arc {
        std::size_t to;
        std::size_t rev;  // index of the paired arc in adj_[to]
        std::int64_t cap;
        std::int64_t cost;
        std::int64_t capacity;  // original capacity; 0 for reverse arcs
    };

    void add_arc(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost);
    void init_potentials();

    const Poset& poset_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<std::size_t> profit_arc_;  // position of v's unit arc in adj_[in_node(v)]
    std::vector<std::int64_t> potential_;

    bool path_ready_ = false;
    std::int64_t path_cost_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> parent_;  // (node, arc index)

    std::size_t flow_value_ = 0;
    std::int64_t total_gain_ = 0;
};

}  // namespace tamarib::detail
