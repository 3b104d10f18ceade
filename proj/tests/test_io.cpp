#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tamarib/commands.hpp"
#include "tamarib/io.hpp"

using namespace tamarib;
using namespace tamarib::testing;
using json = nlohmann::ordered_json;

TEST_SUITE_BEGIN("io");

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename Args, typename Cmd>
Run run(Cmd cmd, const Args& args, cli::Limits limits = {}) {
    std::ostringstream out, err;
    const int code = cmd(args, limits, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) c += line.find(needle) != std::string::npos;
    return c;
}

}  // namespace

TEST_CASE("poset document round trip (property)") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poset(rng, 1 + static_cast<std::size_t>(trial % 10), 0.3);
        const auto levels = level_map(p, LevelMode::lowest);
        const auto text = to_json(make_poset_document(p, "generic", std::nullopt, true, &levels)).dump();
        const auto doc = parse_poset_document(json::parse(text));
        CHECK(doc.levels == levels.level);
        const auto q = to_poset(doc);
        CHECK(q.labels() == p.labels());
        for (Index u = 0; u < p.size(); ++u)
            for (Index v = 0; v < p.size(); ++v) CHECK(q.leq(u, v) == p.leq(u, v));
    }
}

TEST_CASE("poset document validation") {
    json j = to_json(make_poset_document(chain_poset(3), "generic", std::nullopt));
    CHECK_NOTHROW(parse_poset_document(j));

    auto bad = j;
    bad["format_version"] = 99;
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
    bad = j;
    bad["kind"] = "mystery";
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
    bad = j;
    bad["covers"].push_back({0, 7});
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
    bad = j;
    bad["covers"].push_back({2, 0});
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
    bad = j;
    bad["levels"] = {{"0", 0}, {"1", 0}, {"2", 1}};  // 0 < 1 on the same level
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
    bad = j;
    bad.erase("covers");
    CHECK_THROWS_AS(parse_poset_document(bad), std::invalid_argument);
}

TEST_CASE("DOT output") {
    const auto single = to_dot(chain_poset(1), "one");
    CHECK(count_lines(single, "[label=") == 1);
    CHECK(count_lines(single, "->") == 0);

    const auto lattice = build_type_b_lattice(2);
    const auto levels = level_map(lattice.poset, LevelMode::lowest);
    const auto dot = to_dot(lattice.poset, "tamari_b_2", &levels);
    CHECK(count_lines(dot, "[label=") == 6);
    CHECK(count_lines(dot, "->") == lattice.poset.covers().size());
    CHECK(count_lines(dot, "rank=same") == 5);
}

TEST_CASE("enumerate command") {
    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 2, "count", false}).out == "6\n");
    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"a", 3, "count", false}).out == "5\n");
    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 1, "list", false}).out == "(0)\n(inf)\n");

    const auto j = json::parse(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 2, "json", true}).out);
    CHECK(j["kind"] == "tamari_b");
    CHECK(j["elements"].size() == 6);
    CHECK(j.contains("covers"));
    CHECK_FALSE(json::parse(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 2, "json", false}).out).contains("covers"));

    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"c", 2, "count", false}).code == cli::kUsage);
    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 0, "count", false}).code == cli::kUsage);
    const auto capped = run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 8, "count", false});
    CHECK(capped.code == cli::kUsage);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(run(cli::cmd_enumerate, cli::EnumerateArgs{"b", 8, "count", false}, cli::Limits{8, 9}).out == "12870\n");
}

TEST_CASE("lambda command") {
    const auto k1 = run(cli::cmd_lambda, cli::LambdaArgs{"b", 4, 1});
    CHECK(k1.code == 0);
    CHECK(k1.out.rfind("17\n", 0) == 0);
    CHECK(k1.out.find("chain 1: (0,0,0,0) < ") != std::string::npos);
    CHECK(run(cli::cmd_lambda, cli::LambdaArgs{"b", 4, 2}).out.rfind("29\n", 0) == 0);
    CHECK(run(cli::cmd_lambda, cli::LambdaArgs{"b", 2, std::nullopt}).out == "[5,1]\n");
    CHECK(run(cli::cmd_lambda, cli::LambdaArgs{"b", 2, 0}).code == cli::kUsage);
}

TEST_CASE("verify command") {
    const auto thm = run(cli::cmd_verify, cli::VerifyArgs{"thm1", "4..5"});
    CHECK(thm.code == 0);
    CHECK(count_lines(thm.out, "\"status\":\"verified\"") == 2);

    const auto lemma = run(cli::cmd_verify, cli::VerifyArgs{"lemma1", "2"});
    CHECK(lemma.code == 0);
    CHECK(json::parse(lemma.out)["status"] == "verified");

    const auto skipped = run(cli::cmd_verify, cli::VerifyArgs{"thm1", "3"});
    CHECK(skipped.code == 0);
    const auto report = json::parse(skipped.out);
    CHECK(report["status"] == "skipped");
    CHECK(report["claim"] == "thm1");
    CHECK(report["n"] == 3);
    CHECK(report.contains("witness"));

    CHECK(run(cli::cmd_verify, cli::VerifyArgs{"nonsense", "4"}).code == cli::kUsage);
    CHECK(run(cli::cmd_verify, cli::VerifyArgs{"thm1", "5..4"}).code == cli::kUsage);
    CHECK(run(cli::cmd_verify, cli::VerifyArgs{"thm1", "x"}).code == cli::kUsage);
}

TEST_CASE("export command") {
    const auto dot = run(cli::cmd_export, cli::ExportArgs{"b", 2, "dot", std::nullopt, std::nullopt, std::nullopt});
    CHECK(dot.code == 0);
    CHECK(count_lines(dot.out, "[label=") == 6);

    const auto with_levels = json::parse(
        run(cli::cmd_export, cli::ExportArgs{"b", 4, "json", std::string("shifted"), std::nullopt, std::nullopt}).out);
    CHECK(with_levels["elements"].size() == 70);
    CHECK(with_levels["levels"].size() == 70);
    const auto without = json::parse(
        run(cli::cmd_export, cli::ExportArgs{"b", 4, "json", std::nullopt, std::nullopt, std::nullopt}).out);
    CHECK_FALSE(without.contains("levels"));

    const auto dir = std::filesystem::temp_directory_path() / "tamarib_io_test";
    std::filesystem::create_directories(dir);
    const auto doc_path = (dir / "single.json").string();
    {
        std::ofstream f(doc_path);
        f << to_json(make_poset_document(chain_poset(1), "generic", std::nullopt)).dump();
    }
    const auto generic =
        run(cli::cmd_export, cli::ExportArgs{"", 0, "dot", std::nullopt, doc_path, std::nullopt});
    CHECK(generic.code == 0);
    CHECK(count_lines(generic.out, "[label=") == 1);
    CHECK(count_lines(generic.out, "->") == 0);

    const auto out_path = (dir / "t3.dot").string();
    CHECK(run(cli::cmd_export, cli::ExportArgs{"b", 3, "dot", std::nullopt, std::nullopt, out_path}).code == 0);
    CHECK(std::filesystem::file_size(out_path) > 0);

    const auto unwritable = run(cli::cmd_export, cli::ExportArgs{"b", 2, "dot", std::nullopt, std::nullopt,
                                                                  std::string("/nonexistent-dir/x/y.dot")});
    CHECK(unwritable.code == cli::kUsage);
    std::filesystem::remove_all(dir);
}

TEST_SUITE_END();
