// Copyright 2026 The qac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line campaigns and their machine-readable reports.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 input or usage error.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qac/probclone.hpp"

namespace qac::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Subcommand { verify, optimize, prob, feasibility, baseline };
enum class Format { json, csv };

/// Bad command line, unreadable input file or unwritable output.
/// `exit_code` is 0 for an explicit --help request.
struct UsageError : std::runtime_error {
    UsageError(const std::string &what, int code = kExitUsage) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::verify;
    std::optional<std::uint64_t> samples;
    std::uint64_t shots = 100000;
    std::size_t restarts = 20;
    std::size_t iters = 600;
    std::size_t ancilla_dim = 4;
    bool spinflip = false;
    std::optional<double> theta;
    std::size_t L = 1;
    std::size_t M = 1;
    std::string states_path;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string output_path;  // empty: standard output
    Format format = Format::json;
    bool timing = false;
};

/// One judged quantity: passes when `value relation tolerance` holds.
struct Check {
    std::string name;
    double value = 0.0;
    std::string relation;  // "<=" or ">="
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string subcommand;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<Check> checks;
    /// Unjudged context (per-restart values, certificates, ...).
    nlohmann::json info = nlohmann::json::object();
    std::optional<std::string> error;
    /// Only serialized with --timing, so default reports stay byte-reproducible.
    std::optional<double> duration_seconds;

    void expect_at_most(std::string name, double value, double tolerance);
    void expect_at_least(std::string name, double value, double tolerance);
    bool all_pass() const;
};

struct RunResult {
    Report report;
    int exit_code = kExitPass;
};

/// Arguments exclude the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string> &args);

RunResult run(const RunConfig &config);

/// {"states": [[[re, im], [re, im]], ...], "labels": [...]} with normalization
/// enforced to 1e-8 and silent renormalization beyond 1e-12. Throws UsageError.
StateSet load_states(const std::string &path);
StateSet parse_states(const nlohmann::json &doc);

nlohmann::json to_json(const Report &r);
std::string to_csv(const Report &r);

/// Writes to `path`, or standard output when empty. Throws UsageError on I/O failure.
void write_report(const Report &r, Format format, const std::string &path);

/// Full program: parse, run, write. Returns the process exit code.
int main_entry(const std::vector<std::string> &args);

}  // namespace qac::cli
