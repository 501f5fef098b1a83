#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fdepth::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    property_failure = 1,
    input_error = 2,
    precondition_error = 3,
};

struct Source {
    std::optional<std::string> data;
    std::optional<std::string> cdf;
    std::optional<std::size_t> alpha_levels;
};

struct DepthArgs {
    Source source;
    std::string query;
    std::string method = "tukey";
    std::optional<double> r;
    std::optional<std::string> out;
    std::string format = "json";
    unsigned threads = 0;
};

struct MedianArgs {
    Source source;
    std::string method = "band";
    std::optional<std::string> out;
    std::string format = "json";
};

struct VerifyArgs {
    Source source;
    std::size_t trials = 200;
    std::uint64_t seed = 7;
    std::optional<std::string> out;
    unsigned threads = 0;
};

/// Each command writes its result to `out` (or `stdout` when no path is
/// given) and diagnostics to `err`, and returns an ExitCode.
int cmd_depth(const DepthArgs& args, std::ostream& stdout_, std::ostream& err);
int cmd_median(const MedianArgs& args, std::ostream& stdout_, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& stdout_, std::ostream& err);

/// Parses argv (subcommands depth, median, band, verify) and dispatches.
int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& err);

}  // namespace fdepth::cli
