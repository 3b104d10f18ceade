#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamarib/bitset.hpp"

namespace tamarib {

using Index = std::size_t;
using Cover = std::pair<Index, Index>;  // (lower, upper)

/// Raised when a relation handed to Poset::build is not a partial order.
/// The witness holds the offending indices (a pair or a triple).
class OrderViolation : public std::invalid_argument {
public:
    enum class Kind { reflexivity, antisymmetry, transitivity };

    OrderViolation(Kind kind, std::vector<Index> witness, const std::string& what)
        : std::invalid_argument(what), kind_(kind), witness_(std::move(witness)) {}

    Kind kind() const { return kind_; }
    const std::vector<Index>& witness() const { return witness_; }

private:
    Kind kind_;
    std::vector<Index> witness_;
};

/// Finite poset with its order stored as a closed relation (one up-set and
/// one down-set bitset per element) and its Hasse diagram precomputed.
///
/// Immutable after construction. Element indices follow the input order.
class Poset {
public:
    using LeqFn = std::function<bool(Index, Index)>;

    /// Builds from labels and an index predicate. The predicate is evaluated
    /// on every ordered pair and must describe a partial order; violations
    /// throw OrderViolation with a witness.
    static Poset build(std::vector<std::string> labels, const LeqFn& leq);

    /// Builds from a cover list (any acyclic relation works; the order is its
    /// reflexive-transitive closure). Throws std::invalid_argument on
    /// out-of-range indices or cycles.
    static Poset from_relations(std::vector<std::string> labels, std::span<const Cover> relations);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Index v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(Index u, Index v) const { return up_[u].test(v); }
    bool less(Index u, Index v) const { return u != v && up_[u].test(v); }
    bool comparable(Index u, Index v) const { return leq(u, v) || leq(v, u); }

    /// Elements >= v (including v).
    const Bitset& up_set(Index v) const { return up_[v]; }
    /// Elements <= v (including v).
    const Bitset& down_set(Index v) const { return down_[v]; }

    /// Cover pairs sorted lexicographically.
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<Index>& upper_covers(Index v) const { return upper_covers_[v]; }
    const std::vector<Index>& lower_covers(Index v) const { return lower_covers_[v]; }

    /// A linear extension (stable: ties broken by index).
    const std::vector<Index>& linear_extension() const { return linear_extension_; }

    /// Number of strict relations u < v.
    std::size_t strict_relation_count() const;

private:
    Poset(std::vector<std::string> labels, std::vector<Bitset> up);

    std::vector<std::string> labels_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<Cover> covers_;
    std::vector<std::vector<Index>> upper_covers_;
    std::vector<std::vector<Index>> lower_covers_;
    std::vector<Index> linear_extension_;
};

/// Convenience wrapper: labels are produced by `to_label`, order by `leq`
/// on the items themselves.
template <typename T, typename Leq, typename ToLabel>
Poset build_poset(std::span<const T> items, Leq leq, ToLabel to_label) {
    std::vector<std::string> labels;
    labels.reserve(items.size());
    for (const auto& item : items) labels.push_back(to_label(item));
    return Poset::build(std::move(labels),
                        [&](Index a, Index b) { return static_cast<bool>(leq(items[a], items[b])); });
}

enum class LevelMode { lowest, highest, shifted };

/// element -> level; every fiber is an antichain.
struct LevelAssignment {
    std::vector<int> level;
    LevelMode mode = LevelMode::lowest;

    int max_level() const;
    /// Elements grouped by level, index order inside each fiber.
    std::vector<std::vector<Index>> fibers() const;
};

struct LeveledSubposet {
    std::vector<Index> members;  // ascending
    std::vector<int> levels;     // lowest level of each member, parallel to members
};

/// Length (edges) of a longest chain.
int longest_chain_length(const Poset& p);

/// lowest: longest path from a minimal element.
/// highest: L - longest path to a maximal element, L the global longest chain length.
/// LevelMode::shifted is produced by shifted_level_map, not here.
LevelAssignment level_map(const Poset& p, LevelMode mode);

/// Longest path length from v up to a maximal element, for every v.
std::vector<int> height_above(const Poset& p);

/// Elements lying on a chain of maximum length.
LeveledSubposet leveled_subposet(const Poset& p);

/// Lowest levels, with every element outside the leveled subposet moved up by one.
LevelAssignment shifted_level_map(const Poset& p);

/// True iff every fiber of `levels` is an antichain in `p`.
bool fibers_are_antichains(const Poset& p, const LevelAssignment& levels);

/// Checks the leveled-poset cover condition on `sub` inside `p`: every member
/// not on the top level is covered (within the members) by a member exactly
/// one level up, and every member not on the bottom level covers one exactly
/// one level down.
bool satisfies_leveled_condition(const Poset& p, const LeveledSubposet& sub);

/// Restriction of the order to `members`, reindexed in the given order.
Poset induced_subposet(const Poset& p, std::span<const Index> members);

/// Same elements with the order reversed.
Poset dual(const Poset& p);

/// Exact order-isomorphism test (backtracking with invariant pruning).
bool is_isomorphic(const Poset& p, const Poset& q);

/// An isomorphism p -> q as an index map, if one exists.
std::optional<std::vector<Index>> find_isomorphism(const Poset& p, const Poset& q);

}  // namespace tamarib
