#include <random>
#include <set>

#include "chain_flow.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "tamarib/gk.hpp"

using namespace tamarib;
using namespace tamarib::testing;

TEST_SUITE_BEGIN("gk");

namespace {

void check_family(const Poset& p, const ChainFamily& f, std::size_t k) {
    CHECK(f.chains.size() == k);
    std::size_t total = 0;
    for (const auto& c : f.chains) {
        CHECK(is_chain(p, c));
        total += c.size();
    }
    CHECK(total == f.total);
    CHECK(pairwise_disjoint(f.chains, p.size()));
}

void check_family(const Poset& p, const AntichainFamily& f, std::size_t k) {
    CHECK(f.antichains.size() == k);
    std::size_t total = 0;
    for (const auto& a : f.antichains) {
        CHECK(is_antichain(p, a));
        total += a.size();
    }
    CHECK(total == f.total);
    CHECK(pairwise_disjoint(f.antichains, p.size()));
}

}  // namespace

TEST_CASE("k = 0 is rejected") {
    const auto p = chain_poset(2);
    CHECK_THROWS_AS(max_k_chain_union(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_k_antichain_union(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle_k_chain_union(p, 0), std::invalid_argument);
}

TEST_CASE("enough chains cover everything; extra chains are empty") {
    const auto p = diamond_poset();
    const auto f = max_k_chain_union(p, 5);
    CHECK(f.total == 4);
    check_family(p, f, 5);
    std::size_t empty = 0;
    for (const auto& c : f.chains) empty += c.empty();
    CHECK(empty == 3);
}

TEST_CASE("T_2^B chain unions") {
    const auto p = build_type_b_lattice(2).poset;
    const auto one = max_k_chain_union(p, 1);
    CHECK(one.total == 5);
    check_family(p, one, 1);
    CHECK(max_k_chain_union(p, 2).total == 6);
    CHECK(oracle_k_chain_union(p, 1) == 5);
    CHECK(oracle_k_chain_union(p, 2) == 6);
    CHECK(gk_partition(p).parts == std::vector<std::size_t>{5, 1});
}

TEST_CASE("T_4^B chain unions") {
    const auto p = build_type_b_lattice(4).poset;
    const auto one = max_k_chain_union(p, 1);
    const auto two = max_k_chain_union(p, 2);
    CHECK(one.total == 17);
    CHECK(two.total == 29);
    check_family(p, two, 2);
    const auto lambda = gk_partition(p);
    REQUIRE(lambda.parts.size() >= 2);
    CHECK(lambda.parts[0] == 17);
    CHECK(lambda.parts[1] == 12);
    CHECK(lambda.sum() - 29 == 41);
}

TEST_CASE("antichain partition gk of an antichain") {
    const auto p = antichain_poset(4);
    CHECK(gk_partition(p).parts == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(max_k_antichain_union(p, 1).total == 4);
}

TEST_CASE("antichain unions on small posets") {
    const auto chain = chain_poset(5);
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto f = max_k_antichain_union(chain, k);
        CHECK(f.total == k);
        check_family(chain, f, k);
    }
    const auto t2 = build_type_b_lattice(2).poset;
    const auto f = max_k_antichain_union(t2, 1);
    CHECK(f.total == 2);
    check_family(t2, f, 1);
    CHECK(oracle_k_antichain_union(t2, 1) == 2);
}

TEST_CASE("oracle examples") {
    CHECK(oracle_k_chain_union(chain_poset(3), 1) == 3);
    CHECK(oracle_k_chain_union(diamond_poset(), 1) == 3);
    CHECK(oracle_k_chain_union(diamond_poset(), 2) == 4);
    CHECK_THROWS_AS(oracle_k_chain_union(chain_poset(21), 1), std::invalid_argument);
    CHECK_THROWS_AS(oracle_k_chain_union(chain_poset(3), 4), std::invalid_argument);
}

TEST_CASE("conjugate") {
    GKPartition lambda{{5, 3, 3, 1}};
    CHECK(lambda.conjugate() == std::vector<std::size_t>{4, 3, 3, 1, 1});
    CHECK(lambda.prefix_sum(2) == 8);
    CHECK(lambda.prefix_sum(10) == 12);
}

TEST_CASE("flow matches exhaustive search on random posets (property)") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t size = 1 + static_cast<std::size_t>(rng() % 12);
        const double density = 0.1 + 0.1 * static_cast<double>(rng() % 6);
        const auto p = random_poset(rng, size, density);
        const auto lambda = gk_partition(p);

        CHECK(lambda.sum() == p.size());
        CHECK(std::is_sorted(lambda.parts.rbegin(), lambda.parts.rend()));
        CHECK(lambda.parts.front() == static_cast<std::size_t>(longest_chain_length(p) + 1));

        for (std::size_t k = 1; k <= 3; ++k) {
            const auto f = max_k_chain_union(p, k);
            CHECK(f.total == oracle_k_chain_union(p, k));
            CHECK(f.total == lambda.prefix_sum(k));
            check_family(p, f, k);
        }
        const auto conj = lambda.conjugate();
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto a = max_k_antichain_union(p, k);
            CHECK(a.total == oracle_k_antichain_union(p, k));
            CHECK(a.total == GKPartition{conj}.prefix_sum(k));
            check_family(p, a, k);
        }
        // width = number of parts
        CHECK(oracle_k_antichain_union(p, 1) == lambda.parts.size());
    }
}

TEST_CASE("flows are integral on unit arcs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_poset(rng, 10, 0.3);
        detail::ChainFlow flow(p);
        for (int step = 0; step < 3 && flow.next_gain() > 0; ++step) flow.augment();
        const auto flows = flow.arc_flows();
        const auto caps = flow.arc_capacities();
        for (std::size_t i = 0; i < flows.size(); ++i) {
            CHECK(flows[i] >= 0);
            CHECK(flows[i] <= caps[i]);
            if (caps[i] == 1) CHECK((flows[i] == 0 || flows[i] == 1));
        }
        std::size_t collected = 0;
        for (Index v = 0; v < p.size(); ++v) collected += static_cast<std::size_t>(flow.element_flow(v));
        CHECK(static_cast<std::int64_t>(collected) == flow.total_gain());
    }
}

TEST_SUITE_END();
