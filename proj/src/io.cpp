#include "tamarib/io.hpp"

#include <sstream>
#include <stdexcept>

namespace tamarib {

using json = nlohmann::ordered_json;

PosetDocument make_poset_document(const Poset& p, std::string kind, std::optional<int> n, bool with_covers,
                                  const LevelAssignment* levels) {
    PosetDocument doc;
    doc.kind = std::move(kind);
    doc.n = n;
    doc.elements = p.labels();
    if (with_covers) doc.covers = p.covers();
    if (levels) doc.levels = levels->level;
    return doc;
}

json to_json(const PosetDocument& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["kind"] = doc.kind;
    if (doc.n) j["n"] = *doc.n;
    j["elements"] = doc.elements;
    if (doc.covers) {
        json covers = json::array();
        for (auto [u, v] : *doc.covers) covers.push_back({u, v});
        j["covers"] = std::move(covers);
    }
    if (doc.levels) {
        json levels = json::object();
        for (std::size_t i = 0; i < doc.levels->size(); ++i) levels[std::to_string(i)] = (*doc.levels)[i];
        j["levels"] = std::move(levels);
    }
    return j;
}

PosetDocument parse_poset_document(const json& j) {
    auto fail = [](const std::string& what) -> void { throw std::invalid_argument("poset document: " + what); };
    if (!j.is_object()) fail("not a JSON object");
    PosetDocument doc;
    try {
        doc.format_version = j.at("format_version").get<int>();
        doc.kind = j.at("kind").get<std::string>();
        if (j.contains("n")) doc.n = j.at("n").get<int>();
        doc.elements = j.at("elements").get<std::vector<std::string>>();
        if (!j.contains("covers")) fail("missing covers");
        std::vector<Cover> covers;
        for (const auto& pair : j.at("covers")) {
            if (!pair.is_array() || pair.size() != 2) fail("cover entries must be [lower, upper] pairs");
            covers.emplace_back(pair[0].get<Index>(), pair[1].get<Index>());
        }
        doc.covers = std::move(covers);
        if (j.contains("levels")) {
            std::vector<int> levels(doc.elements.size(), -1);
            for (const auto& [key, value] : j.at("levels").items()) {
                const auto idx = std::stoul(key);
                if (idx >= levels.size()) fail("level index out of range");
                levels[idx] = value.get<int>();
            }
            for (int l : levels)
                if (l < 0) fail("levels must cover every element");
            doc.levels = std::move(levels);
        }
    } catch (const nlohmann::json::exception& e) {
        fail(e.what());
    }
    if (doc.format_version != kPosetFormatVersion) fail("unsupported format_version " + std::to_string(doc.format_version));
    if (doc.kind != "tamari_a" && doc.kind != "tamari_b" && doc.kind != "generic") fail("unknown kind " + doc.kind);

    const Poset p = to_poset(doc);
    if (doc.levels && !fibers_are_antichains(p, LevelAssignment{*doc.levels, LevelMode::lowest}))
        fail("a level fiber is not an antichain");
    return doc;
}

Poset to_poset(const PosetDocument& doc) {
    if (!doc.covers) throw std::invalid_argument("poset document: missing covers");
    return Poset::from_relations(doc.elements, *doc.covers);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& name, const LevelAssignment* levels) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (Index v = 0; v < p.size(); ++v) os << "  v" << v << " [label=\"" << dot_escape(p.label(v)) << "\"];\n";
    for (auto [u, v] : p.covers()) os << "  v" << u << " -> v" << v << ";\n";
    if (levels) {
        const auto fibers = levels->fibers();
        for (std::size_t l = 0; l < fibers.size(); ++l) {
            if (fibers[l].empty()) continue;
            os << "  { rank=same;";
            for (Index v : fibers[l]) os << " v" << v << ';';
            os << " }  // level " << l << '\n';
        }
    }
    os << "}\n";
    return os.str();
}

json to_json(const VerificationReport& r) {
    json j;
    j["claim"] = r.claim;
    j["n"] = r.n;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    j["data"] = r.data;
    return j;
}

}  // namespace tamarib
