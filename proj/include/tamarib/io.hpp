#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamarib/poset.hpp"
#include "tamarib/theorem.hpp"

namespace tamarib {

inline constexpr int kPosetFormatVersion = 1;

/// Interchange form of a poset: labels, Hasse edges and optional levels.
struct PosetDocument {
    int format_version = kPosetFormatVersion;
    std::string kind = "generic";  // "tamari_a", "tamari_b" or "generic"
    std::optional<int> n;
    std::vector<std::string> elements;
    std::optional<std::vector<Cover>> covers;
    std::optional<std::vector<int>> levels;
};

PosetDocument make_poset_document(const Poset& p, std::string kind, std::optional<int> n, bool with_covers = true,
                                  const LevelAssignment* levels = nullptr);

nlohmann::ordered_json to_json(const PosetDocument& doc);

/// Parses and checks a document (version, kind, index ranges, acyclic
/// covers, antichain fibers). Throws std::invalid_argument on any problem.
PosetDocument parse_poset_document(const nlohmann::ordered_json& j);

/// Rebuilds the poset from the document's covers; element order is kept.
Poset to_poset(const PosetDocument& doc);

/// Graphviz digraph, bottom to top, one rank group per level when levels are given.
std::string to_dot(const Poset& p, const std::string& name, const LevelAssignment* levels = nullptr);

/// ReportDocument: claim, n, status, witness, data.
nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace tamarib
