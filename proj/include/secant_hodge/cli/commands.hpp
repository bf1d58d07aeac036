#ifndef SECANT_HODGE_CLI_COMMANDS_HPP
#define SECANT_HODGE_CLI_COMMANDS_HPP

#include "secant_hodge/cli/json_io.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace secant_hodge::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kMissingInput = 3 };

enum class Format { Json, Csv, Markdown };

// Report documents. Both throw what the library throws (MissingInputError,
// ParameterError).
Json cmd_lines(const SecantLinesContext& ctx);
Json cmd_curve(const SecantCurveContext& ctx);

struct VerifyConfig {
    int g_max = 2;
    int k_max = 4;
    // 1: Koszul oracle only; 2: adds scissor, semismall, decomposition and
    // cross-module identities; 3: adds the property suite.
    int depth = 3;
    unsigned threads = 1;
    // Test hook: corrupts the closed form the oracles are compared against.
    bool inject_perturbation = false;
};

struct CheckOutcome {
    std::string name;
    Json params;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

std::vector<CheckOutcome> run_verify(const VerifyConfig& cfg);
Json verify_report(const std::vector<CheckOutcome>& outcomes);

// "k\tj\tw\tdim" lines sorted by (k, j, w).
std::string cmd_plot(int g, int k_max);

// csv and markdown flatten the document into (path, value) rows.
std::string render(const Json& doc, Format f);

// Number of workers: hardware concurrency, capped by SECANT_HODGE_THREADS.
// Throws std::invalid_argument on a malformed variable.
unsigned thread_budget();

// Runs `tasks` on up to `threads` workers; results come back in task order.
std::vector<CheckOutcome> run_parallel(const std::vector<std::function<CheckOutcome()>>& tasks, unsigned threads);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace secant_hodge::cli

#endif
