/*
   Copyright 2026 The loglaw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include "loglaw/cli/config.hpp"

namespace loglaw::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_config = 2,
    exit_sampling = 3,
    exit_insufficient_data = 4,
    exit_numeric = 5,
};

/// Maps a library exception to its process exit code.
int exit_code_for(const std::exception_ptr& error);

/// Command-line overrides applied on top of an experiment's config.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> out_dir;
    bool progress = true;
};

struct RunResult {
    std::string name;
    int exit_code = exit_ok;
    std::string message;
    std::filesystem::path records;
    std::filesystem::path summary;
    std::filesystem::path plot;
    nlohmann::json manifest;
};

/// The worker count a run will use: flag, then LOGLAW_WORKERS, then the config, then the hardware.
int effective_workers(const ExperimentConfig& cfg, const RunOptions& opt);

/// Builds everything the experiment needs without simulating; throws ConfigError on problems.
void validate_experiment(const ExperimentConfig& cfg);

/*!
 * Runs one experiment and writes <out>/<name>.records.csv,
 * <out>/<name>.summary.json and <out>/<name>.plot.csv.
 *
 * Records are comma-separated with a header row and written in blocks in
 * index order, so an interrupted run leaves complete rows only. On failure
 * the records written so far are kept and the summary carries the error.
 */
RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opt);

/// Shortest round-trip decimal form of v ("nan", "inf", "-inf" for non-finite values).
std::string format_number(double v);

} // namespace loglaw::cli
