#pragma once

// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 disagreement between methods or a failed verification suite.

#include <iosfwd>
#include <string>
#include <vector>

#include "kostka/sweep.hpp"

namespace kostka::cli {

enum class Command { compute, enumerate, table, verify };
enum class Format { text, json, csv };
enum class MethodChoice { det, rec, oracle, all };

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitVerifyFailed = 2;

struct RunConfig {
    Command command = Command::compute;
    std::vector<int> alpha;
    std::vector<int> beta;
    MethodChoice method = MethodChoice::det;
    int p = 2;
    int q = 2;
    int max_n = 6;
    int rows = -1; // table only; -1 means max_n + 1
    int cols = -1;
    Format format = Format::text;
    int perm_cap = 10;
    bool serial = false;
};

/// Parses "2,1,0" (spaces allowed, empty string is the empty list). Throws
/// std::invalid_argument.
std::vector<int> parse_parts(const std::string& text);

/// Parses argv and dispatches. The perm cap is read from --perm-cap, else
/// from KOSTKA_PERM_CAP, else 10.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// `mu_override` replaces mu inside the mu suites (used to check the failure path).
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, const MuFn& mu_override = {});

} // namespace kostka::cli
