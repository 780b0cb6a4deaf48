#pragma once

#include "arakelov_cli/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arakelov::cli {

enum class Format { json, csv };

struct Options {
    std::string command;
    std::string scenario_path;
    std::string out_dir;  // empty: write to stdout
    Format format = Format::json;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::vector<std::int64_t>> n_list;
};

struct Output {
    Json bundle;      // version, command echo, input hash, result
    std::string csv;  // table for --format csv
};

const std::vector<std::string>& command_names();

// Throws the library's error types; see exit_code().
Output run_command(const Options& opts);

// 2 input error, 3 mathematical infeasibility, 4 internal failure.
int exit_code(const std::exception& e);

// run_command plus emission and error reporting; returns the process exit code.
int run(const Options& opts, std::ostream& out, std::ostream& err);

std::vector<std::int64_t> parse_n_list(const std::string& text);

}  // namespace arakelov::cli
