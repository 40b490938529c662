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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace loglaw::cli {

enum class ExperimentKind { hitting_exponent, cylinder_dimension, correlation, section_check, excursion, cusp_excursion };

std::string to_string(ExperimentKind kind);
/// Parses the hyphenated experiment name; nullopt when unknown.
std::optional<ExperimentKind> parse_experiment_kind(const std::string& name);

struct SystemConfig {
    std::string name;
    std::map<std::string, double> parameters;
};

struct TargetConfig {
    std::string kind = "base-ball"; ///< base-ball, sasaki-ball or strip
    std::vector<double> center;     ///< empty selects the system default
    std::vector<double> radii;      ///< strictly decreasing target radii
    std::optional<double> cache_radius;
    int axis = 0;                   ///< strip targets only
};

struct ObservableConfig {
    std::string kind = "cone"; ///< cone or cosine
    std::vector<double> center;
    double height = 0.3;
    int axis = 0;
};

/// Budget override: t_max(l) = factor * l^(-d).
struct TMaxOverride {
    double factor = 100.0;
    std::optional<double> d;
};

struct ExperimentConfig {
    std::string name;
    ExperimentKind experiment = ExperimentKind::hitting_exponent;
    SystemConfig system;
    TargetConfig target;
    std::uint64_t ensemble = 200;
    std::uint64_t seed = 0;
    std::optional<TMaxOverride> t_max;
    std::string output_dir = "out";
    int workers = 0;

    std::vector<double> epsilons; ///< cylinder-dimension
    std::uint64_t samples = 1000000;
    std::vector<double> t_grid;   ///< correlation, excursion, cusp-excursion
    ObservableConfig observable;
    double step = 0.25;           ///< cusp-excursion sampling step

    nlohmann::json echo; ///< the experiment's entry as read, for the run manifest
};

/*!
 * Reads a YAML document holding either one experiment at the top level or a
 * list under `experiments:`. Every experiment needs a unique `name`. Keys are
 * checked against the known set so typos surface as ConfigError naming the
 * offending key path.
 */
std::vector<ExperimentConfig> parse_config_text(const std::string& text);
std::vector<ExperimentConfig> load_config(const std::string& path);

} // namespace loglaw::cli
