#include "tamarib/commands.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "tamarib/gk.hpp"
#include "tamarib/io.hpp"
#include "tamarib/tamari.hpp"
#include "tamarib/theorem.hpp"

namespace tamarib::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_type(const std::string& type) {
    if (type != "a" && type != "b") throw UsageError("--type must be 'a' or 'b', got '" + type + "'");
}

void check_n(const std::string& type, int n, const Limits& limits) {
    const int cap = type == "a" ? limits.max_n_a : limits.max_n_b;
    if (n < 1) throw UsageError("--n must be at least 1");
    if (n > cap)
        throw UsageError("n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap) + " for type " + type +
                         " (raise it with --max-n)");
    if (n > kMaxEnumerationN) throw UsageError("n=" + std::to_string(n) + " exceeds the enumerator limit");
}

struct Lattice {
    std::string kind;
    Poset poset;
};

Lattice build_lattice(const std::string& type, int n) {
    if (type == "a") return {"tamari_a", build_type_a_lattice(n).poset};
    return {"tamari_b", build_type_b_lattice(n).poset};
}

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw UsageError("bad --n value '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = to_int(text);
        return {n, n};
    }
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty --n range '" + text + "'");
    return {lo, hi};
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace

int cmd_enumerate(const EnumerateArgs& args, const Limits& limits, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_type(args.type);
        check_n(args.type, args.n, limits);
        if (args.format != "list" && args.format != "json" && args.format != "count")
            throw UsageError("--format must be list, json or count");

        std::vector<std::string> labels;
        if (args.type == "a") {
            for (const auto& v : enumerate_type_a(args.n)) labels.push_back(to_string(v));
        } else {
            for (const auto& v : enumerate_type_b(args.n)) labels.push_back(to_string(v));
        }

        if (args.format == "count") {
            out << labels.size() << '\n';
        } else if (args.format == "list") {
            for (const auto& l : labels) out << l << '\n';
        } else {
            const auto lattice = build_lattice(args.type, args.n);
            out << to_json(make_poset_document(lattice.poset, lattice.kind, args.n, args.hasse)).dump(2) << '\n';
        }
        return kOk;
    });
}

int cmd_lambda(const LambdaArgs& args, const Limits& limits, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_type(args.type);
        check_n(args.type, args.n, limits);
        if (args.k && *args.k == 0) throw UsageError("--k must be positive");
        const auto lattice = build_lattice(args.type, args.n);
        if (!args.k) {
            out << nlohmann::json(gk_partition(lattice.poset).parts).dump() << '\n';
            return kOk;
        }
        const auto family = max_k_chain_union(lattice.poset, *args.k);
        out << family.total << '\n';
        for (std::size_t c = 0; c < family.chains.size(); ++c) {
            out << "chain " << c + 1 << ':';
            if (family.chains[c].empty()) out << " (empty)";
            for (std::size_t i = 0; i < family.chains[c].size(); ++i)
                out << (i ? " < " : " ") << lattice.poset.label(family.chains[c][i]);
            out << '\n';
        }
        return kOk;
    });
}

int cmd_verify(const VerifyArgs& args, const Limits& limits, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        static const std::vector<std::string> kClaims{"lemma1", "thm1", "partition", "leveled", "remarks"};
        std::vector<std::string> claims;
        if (args.claim == "all")
            claims = kClaims;
        else if (std::find(kClaims.begin(), kClaims.end(), args.claim) != kClaims.end())
            claims = {args.claim};
        else
            throw UsageError("unknown claim '" + args.claim + "'");

        const auto [lo, hi] = parse_range(args.n_range);
        for (int n = lo; n <= hi; ++n) check_n("b", n, limits);

        // Independent per n; results are collected and printed in n order.
        std::vector<std::future<std::vector<VerificationReport>>> jobs;
        for (int n = lo; n <= hi; ++n) {
            jobs.push_back(std::async(std::launch::async, [n, &claims] {
                const auto lattice = build_type_b_lattice(n);
                std::vector<VerificationReport> reports;
                for (const auto& claim : claims) {
                    if (claim == "lemma1") reports.push_back(verify_lemma1(lattice));
                    if (claim == "thm1") reports.push_back(verify_theorem1(lattice));
                    if (claim == "partition") reports.push_back(verify_antichain_partition(lattice));
                    if (claim == "leveled") reports.push_back(verify_leveled_union(lattice));
                    if (claim == "remarks")
                        for (auto& r : structural_remarks(lattice)) reports.push_back(std::move(r));
                }
                return reports;
            }));
        }
        bool refuted = false;
        for (auto& job : jobs) {
            for (const auto& r : job.get()) {
                refuted = refuted || r.status == Status::refuted;
                out << to_json(r).dump() << '\n';
            }
        }
        return refuted ? kRefuted : kOk;
    });
}

int cmd_export(const ExportArgs& args, const Limits& limits, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (args.format != "dot" && args.format != "json") throw UsageError("--format must be dot or json");
        if (args.layout && *args.layout != "lowest" && *args.layout != "shifted")
            throw UsageError("--layout must be lowest or shifted");

        std::string kind;
        std::optional<int> n;
        std::optional<Poset> poset;
        if (args.in) {
            std::ifstream in(*args.in);
            if (!in) throw UsageError("cannot read " + *args.in);
            nlohmann::ordered_json j;
            try {
                j = nlohmann::ordered_json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("bad JSON in ") + *args.in + ": " + e.what());
            }
            auto doc = parse_poset_document(j);
            kind = doc.kind;
            n = doc.n;
            poset = to_poset(doc);
        } else {
            check_type(args.type);
            check_n(args.type, args.n, limits);
            auto lattice = build_lattice(args.type, args.n);
            kind = lattice.kind;
            n = args.n;
            poset = std::move(lattice.poset);
        }

        const auto mode = args.layout.value_or("lowest") == "shifted" ? LevelMode::shifted : LevelMode::lowest;
        const auto levels = level_map(*poset, mode);
        if (!fibers_are_antichains(*poset, levels))
            throw UsageError("the shifted layout does not split this poset into antichains");

        std::string text;
        if (args.format == "dot") {
            const std::string name = n ? kind + "_" + std::to_string(*n) : kind;
            text = to_dot(*poset, name, &levels);
        } else {
            text = to_json(make_poset_document(*poset, kind, n, true, args.layout ? &levels : nullptr)).dump(2) + "\n";
        }

        if (!args.out) {
            out << text;
            return kOk;
        }
        std::ofstream file(*args.out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + *args.out);
        file << text;
        file.close();
        if (!file) throw UsageError("failed writing " + *args.out);
        return kOk;
    });
}

}  // namespace tamarib::cli
