#pragma once

#include <cstddef>
#include <vector>

#include "tamarib/poset.hpp"

namespace tamarib {

/// k pairwise-disjoint chains; each chain lists element indices bottom to top.
/// Chains beyond what is needed to reach the maximum are empty.
struct ChainFamily {
    std::vector<std::vector<Index>> chains;
    std::size_t total = 0;
};

/// k pairwise-disjoint antichains.
struct AntichainFamily {
    std::vector<std::vector<Index>> antichains;
    std::size_t total = 0;
};

/// Greene-Kleitman partition: the first k parts sum to the largest union of k chains.
struct GKPartition {
    std::vector<std::size_t> parts;

    std::size_t sum() const;
    /// Sum of the first k parts (all of them when k exceeds the length).
    std::size_t prefix_sum(std::size_t k) const;
    /// Transposed Young diagram.
    std::vector<std::size_t> conjugate() const;
};

/// Largest union of k chains, computed by min-cost flow. Throws
/// std::invalid_argument for k = 0.
ChainFamily max_k_chain_union(const Poset& p, std::size_t k);

/// Full partition, one flow augmentation per part.
GKPartition gk_partition(const Poset& p);

/// Largest union of k antichains, read off the optimal dual potentials of the
/// chain flow. Throws std::invalid_argument for k = 0.
AntichainFamily max_k_antichain_union(const Poset& p, std::size_t k);

/// Size cap for the exhaustive oracles.
inline constexpr std::size_t kOracleMaxElements = 20;
inline constexpr std::size_t kOracleMaxChains = 3;

/// Exact largest union of k chains by exhaustive search. Test oracle only;
/// throws std::invalid_argument beyond the caps above.
std::size_t oracle_k_chain_union(const Poset& p, std::size_t k);

/// Exact largest union of k antichains by subset enumeration (a subset is such
/// a union iff it has no chain of k+1 elements). Test oracle only.
std::size_t oracle_k_antichain_union(const Poset& p, std::size_t k);

/// Structural checks used by tests and verifiers.
bool is_chain(const Poset& p, const std::vector<Index>& chain);
bool is_antichain(const Poset& p, const std::vector<Index>& set);
bool pairwise_disjoint(const std::vector<std::vector<Index>>& sets, std::size_t universe);

}  // namespace tamarib
