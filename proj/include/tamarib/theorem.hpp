#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamarib/poset.hpp"
#include "tamarib/tamari.hpp"

namespace tamarib {

enum class Status { verified, refuted, skipped };

std::string to_string(Status s);

/// Outcome of one machine-checked claim for one n. A refutation always carries
/// a witness; a verification carries the certificate that was checked.
struct VerificationReport {
    std::string claim;
    int n = 0;
    Status status = Status::skipped;
    nlohmann::ordered_json witness;  // null when absent
    nlohmann::ordered_json data;     // null when absent
};

/// The long chain: from the bottom, repeatedly bump the rightmost entry that
/// can be bumped (n-1 goes to infinity) while staying in T_n^B. n^2+1 elements.
std::vector<TBVector> first_chain(int n);

/// The second chain: from (0,...,0,1,2), repeatedly bump the leftmost entry
/// that can be bumped, stopping at (n-2,n-1,inf,...,inf). With the prefix,
/// (0,...,0,1,0) is placed in front. Requires n >= 4.
std::vector<TBVector> second_chain(int n, bool with_prefix);

VerificationReport verify_disjoint(std::span<const TBVector> a, std::span<const TBVector> b);

/// Lowest levels, with the elements off every maximum-length chain moved up
/// one level together.
LevelAssignment antichain_partition(const TypeBLattice& lattice);
LevelAssignment antichain_partition(int n);

/// Checks that the shifted levels are n^2+1 antichains, five of them
/// singletons (n >= 4), namely the bottom two and top three named elements.
VerificationReport verify_antichain_partition(const TypeBLattice& lattice);

/// Leveled elements sit on the level given by their entry sum; the others sit
/// at or below it.
VerificationReport verify_lemma1(const TypeBLattice& lattice);
VerificationReport verify_lemma1(int n);

/// Second Greene-Kleitman part equals the first minus five (n >= 4), with the
/// explicit chains checked as a certificate. For n < 4 the computed parts are
/// reported and the claim is skipped.
VerificationReport verify_theorem1(const TypeBLattice& lattice);
VerificationReport verify_theorem1(int n);

/// The two constructed chains (no prefix) make up exactly the leveled subposet.
/// Checked at n = 4 only; other n report skipped with the two set sizes.
VerificationReport verify_leveled_union(const TypeBLattice& lattice);

/// Three sub-reports: the lattice is not self-dual, its leveled subposet is,
/// and (n = 5) the leveled level sizes contain six 1s and four 2s.
std::vector<VerificationReport> structural_remarks(const TypeBLattice& lattice);
std::vector<VerificationReport> structural_remarks(int n);

/// Every pair has a least upper bound and a greatest lower bound.
bool is_lattice(const Poset& p);

}  // namespace tamarib
