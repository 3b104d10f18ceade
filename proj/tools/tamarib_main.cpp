#include <iostream>

#include "CLI11.hpp"
#include "tamarib/commands.hpp"

int main(int argc, char** argv) {
    using namespace tamarib::cli;

    CLI::App app{"Type-B and classical Tamari lattices: enumeration, Greene-Kleitman partitions, verification"};
    app.require_subcommand(1);

    Limits limits;
    std::optional<int> max_n;
    app.add_option("--max-n", max_n, "Raise the largest accepted n (default 7 for type b, 9 for type a)");

    EnumerateArgs enumerate;
    auto* enum_cmd = app.add_subcommand("enumerate", "List the elements of T_n or T_n^B");
    enum_cmd->add_option("--type", enumerate.type, "a or b")->required();
    enum_cmd->add_option("--n", enumerate.n, "Rank parameter")->required();
    enum_cmd->add_option("--format", enumerate.format, "list, json or count");
    enum_cmd->add_flag("--hasse", enumerate.hasse, "Include cover pairs in JSON output");

    LambdaArgs lambda;
    std::size_t k = 0;
    auto* lambda_cmd = app.add_subcommand("lambda", "Greene-Kleitman partition or a maximum union of k chains");
    lambda_cmd->add_option("--type", lambda.type, "a or b")->required();
    lambda_cmd->add_option("--n", lambda.n, "Rank parameter")->required();
    auto* k_opt = lambda_cmd->add_option("--k", k, "Number of chains");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Machine-check the chain-length results on T_n^B");
    verify_cmd->add_option("--claim", verify.claim, "lemma1, thm1, partition, leveled, remarks or all")->required();
    verify_cmd->add_option("--n", verify.n_range, "N or N..M")->required();

    ExportArgs exp;
    std::string in_path, out_path, layout;
    auto* export_cmd = app.add_subcommand("export", "Write the Hasse diagram as DOT or JSON");
    export_cmd->add_option("--type", exp.type, "a or b");
    export_cmd->add_option("--n", exp.n, "Rank parameter");
    export_cmd->add_option("--format", exp.format, "dot or json")->required();
    auto* layout_opt = export_cmd->add_option("--layout", layout, "lowest or shifted");
    auto* in_opt = export_cmd->add_option("--in", in_path, "Read a poset document instead of a lattice");
    auto* out_opt = export_cmd->add_option("--out", out_path, "Destination file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (max_n) {
        std::cerr << "warning: raising the n cap to " << *max_n << "; large posets may be slow\n";
        limits.max_n_a = limits.max_n_b = *max_n;
    }

    if (*enum_cmd) return cmd_enumerate(enumerate, limits, std::cout, std::cerr);
    if (*lambda_cmd) {
        if (*k_opt) lambda.k = k;
        return cmd_lambda(lambda, limits, std::cout, std::cerr);
    }
    if (*verify_cmd) return cmd_verify(verify, limits, std::cout, std::cerr);
    if (*export_cmd) {
        if (*layout_opt) exp.layout = layout;
        if (*in_opt) exp.in = in_path;
        if (*out_opt) exp.out = out_path;
        if (!exp.in && (exp.type.empty() || exp.n == 0)) {
            std::cerr << "error: export needs --type and --n, or --in\n";
            return kUsage;
        }
        return cmd_export(exp, limits, std::cout, std::cerr);
    }
    return kUsage;
}
