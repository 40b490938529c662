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

#include <optional>
#include <string>
#include <vector>

#include "loglaw/cli/config.hpp"
#include "loglaw/core/system_model.hpp"
#include "loglaw/core/target.hpp"

namespace loglaw::cli {

/// One row of the catalogue: a system, or a system paired with a target or experiment.
struct CatalogueEntry {
    std::string name;     ///< "cat", "bolza/base-ball", "modular/cusp-excursion", ...
    std::string kind;     ///< system, target or experiment
    std::string expected; ///< expected exponent or behaviour, empty when none
    std::string law;      ///< the law the entry exercises
    std::string parameters;
};

/// All entries sorted by name.
std::vector<CatalogueEntry> catalogue();

/// Tab-separated catalogue table with a header row.
std::string format_catalogue(const std::vector<CatalogueEntry>& entries);

/// Builds the named system; ConfigError names the offending key under `path`.
SystemModel make_system(const SystemConfig& cfg, const std::string& path = "system");

/// Builds the target family; radii feed the default hyperbolic cache radius.
TargetFamily make_target(const SystemModel& model, const TargetConfig& cfg, double min_cache_radius = 0.0,
                         const std::string& path = "target");

/// Expected hitting exponent (conditional dimension) for a system and target kind, if catalogued.
std::optional<double> expected_exponent(const std::string& system, const std::string& target_kind);

} // namespace loglaw::cli
