#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace tamarib::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

/// Largest n a command accepts before refusing. Raising it prints a warning.
struct Limits {
    int max_n_b = 7;
    int max_n_a = 9;
};

struct EnumerateArgs {
    std::string type;            // "a" or "b"
    int n = 0;
    std::string format = "list";  // list | json | count
    bool hasse = false;
};

struct LambdaArgs {
    std::string type;
    int n = 0;
    std::optional<std::size_t> k;
};

struct VerifyArgs {
    std::string claim;  // lemma1 | thm1 | partition | leveled | remarks | all
    std::string n_range;  // "N" or "N..M"
};

struct ExportArgs {
    std::string type;  // "a", "b", or empty when reading `in`
    int n = 0;
    std::string format = "dot";  // dot | json
    std::optional<std::string> layout;  // lowest | shifted
    std::optional<std::string> in;      // PosetDocument to export instead of a lattice
    std::optional<std::string> out;
};

int cmd_enumerate(const EnumerateArgs& args, const Limits& limits, std::ostream& out, std::ostream& err);
int cmd_lambda(const LambdaArgs& args, const Limits& limits, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, const Limits& limits, std::ostream& out, std::ostream& err);
int cmd_export(const ExportArgs& args, const Limits& limits, std::ostream& out, std::ostream& err);

}  // namespace tamarib::cli
