#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "milnor_hodge/rational.hpp"

namespace milnor_hodge::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_parse = 3,
    exit_schema = 4,
    exit_precondition = 5,
};

struct TaskRequest {
    std::string command;
    /// File path, or inline JSON when the text starts with '{' or '['.
    std::optional<std::string> input;
    bool json_output = false;
    std::vector<Rational> y_eval;

    std::optional<std::vector<long>> brieskorn_pham;
    std::optional<std::vector<Rational>> quasi_homogeneous;
    std::optional<std::string> spectrum_text;
    std::optional<int> num_vars;

    std::optional<long> degree;
    std::optional<long> dim;
    /// Singularity list for `projective` and `milnor-class`: path or inline JSON.
    std::optional<std::string> sing;

    std::size_t series_order = 0;
    std::uint64_t seed = 20240611;
};

struct TaskResult {
    int exit_code = exit_ok;
    std::string output;
    std::string error;
};

/// Executes one request. Never throws; failures are mapped to exit codes.
TaskResult run(const TaskRequest& req);

struct CommandSpec {
    const char* name;
    const char* summary;
};

struct FlagSpec {
    const char* name;        ///< long flag, e.g. "--degree"
    const char* value_name;  ///< empty for boolean switches
    const char* help;
    std::vector<std::string> commands;
    /// Stores the (already split) value into the request; throws ParseError.
    void (*apply)(TaskRequest&, const std::string&);
};

const std::vector<CommandSpec>& commands();
const std::vector<FlagSpec>& flags();

/// roff manual page rendered from commands() and flags().
std::string manual_page();

/// Full command-line entry point: parses argv with the flag table, reads
/// MILNOR_HODGE_SERIES_ORDER, runs the request and writes to out / err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace milnor_hodge::cli
