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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loglaw/cli/catalogue.hpp"
#include "loglaw/cli/config.hpp"
#include "loglaw/cli/runner.hpp"
#include "loglaw/core/error.hpp"

namespace {

using namespace loglaw::cli;

std::vector<ExperimentConfig> select(std::vector<ExperimentConfig> all, const std::string& name)
{
    if (name.empty())
        return all;
    for (auto& e : all)
        if (e.name == name)
            return {e};
    throw loglaw::ConfigError("--experiment", "no experiment named '" + name + "' in the config");
}

int report(const std::exception_ptr& err)
{
    try {
        std::rethrow_exception(err);
    } catch (const std::exception& e) {
        std::cerr << "loglaw: error: " << e.what() << "\n";
    }
    return exit_code_for(err);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"loglaw: hitting times to shrinking targets and logarithm laws"};
    app.require_subcommand(1);

    std::string config_path;
    std::string experiment;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> out_dir;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "run the experiments of a config file");
    run->add_option("--config", config_path, "YAML experiment config")->required();
    run->add_option("--seed", seed, "master seed, overrides the config");
    run->add_option("--workers", workers, "worker threads, overrides LOGLAW_WORKERS and the config")
        ->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "output directory, overrides the config");
    run->add_option("--experiment", experiment, "run only the named experiment");
    run->add_flag("--quiet", quiet, "suppress progress on standard error");

    auto* validate = app.add_subcommand("validate", "check a config file without running it");
    validate->add_option("--config", config_path, "YAML experiment config")->required();
    validate->add_option("--experiment", experiment, "validate only the named experiment");

    app.add_subcommand("list", "print the catalogue of systems, targets and experiments");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand("list")) {
        std::cout << format_catalogue(catalogue());
        return exit_ok;
    }

    std::vector<ExperimentConfig> experiments;
    try {
        experiments = select(load_config(config_path), experiment);
    } catch (...) {
        return report(std::current_exception());
    }

    if (app.got_subcommand("validate")) {
        for (const auto& e : experiments) {
            try {
                validate_experiment(e);
            } catch (...) {
                std::cout << e.name << "\tinvalid\n";
                return report(std::current_exception());
            }
            std::cout << e.name << "\tok\t" << to_string(e.experiment) << "\t" << e.system.name << "\n";
        }
        return exit_ok;
    }

    RunOptions opt;
    opt.seed = seed;
    opt.workers = workers;
    opt.out_dir = out_dir;
    opt.progress = !quiet;
    for (const auto& e : experiments) {
        const RunResult r = run_experiment(e, opt);
        if (r.exit_code != exit_ok) {
            std::cerr << "loglaw: " << e.name << " failed: " << r.message << "\n";
            return r.exit_code;
        }
        if (!quiet)
            std::cerr << "[" << e.name << "] wrote " << r.records.string() << ", " << r.summary.string() << ", "
                      << r.plot.string() << "\n";
    }
    return exit_ok;
}
