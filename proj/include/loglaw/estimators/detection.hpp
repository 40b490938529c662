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
#include <vector>

#include "loglaw/core/target.hpp"

namespace loglaw::estimators {

/*!
 * First entry times of the orbit of x0 into B_r for strictly decreasing radii,
 * using the detector that fits the system and target:
 *  - maps: every iterate n = 0, 1, ... (exact);
 *  - hyperbolic base balls: closed-form window scan over the translate cache;
 *  - suspension base balls: the base point at each roof crossing (exact);
 *  - every other flow target: the Lipschitz scanner.
 * Entries later than `horizon` are nullopt.
 */
std::vector<std::optional<double>> first_entries(const SystemModel& model, const TargetFamily& target,
                                                 const PhasePoint& x0, const std::vector<double>& radii,
                                                 double horizon);

/// Lipschitz-scanner entry times for any flow, bypassing the specialized detectors.
std::vector<std::optional<double>> lipschitz_entries(const SystemModel& model, const TargetFamily& target,
                                                     const PhasePoint& x0, const std::vector<double>& radii,
                                                     double horizon, double window_fraction = 0.25);

/// Reference detector: samples the level every `step` time units and reports the first sample below r.
std::optional<double> sampled_entry(const SystemModel& model, const TargetFamily& target, const PhasePoint& x0,
                                    double r, double horizon, double step);

} // namespace loglaw::estimators
