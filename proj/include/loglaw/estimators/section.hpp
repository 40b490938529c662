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
#include <vector>

#include "loglaw/core/target.hpp"
#include "loglaw/estimators/hitting.hpp"

namespace loglaw::estimators {

/// One trajectory and radius of the section identity check.
struct SectionRecord {
    std::uint64_t trajectory_id = 0;
    double r = 0.0;
    double tau_flow = 0.0;     ///< flow time of the first roof crossing into S_r
    long tau_section = 0;      ///< first n >= 1 with F^n(x) in S_r
    double sum_roof = 0.0;     ///< sum of roof(F^i x) for 0 <= i < tau_section
    double residual = 0.0;     ///< tau_flow - sum_roof
    bool censored = false;
};

struct SectionReport {
    std::vector<SectionRecord> records;
    double mean_return = 0.0;           ///< Monte Carlo mean of the roof over the starting points
    double mean_return_stderr = 0.0;
    double mean_return_quadrature = 0.0; ///< integral of the roof against base Lebesgue measure
    double max_abs_residual = 0.0;
    ExponentFit flow_fit;
    ExponentFit section_fit;
    std::vector<double> median_ratio; ///< per radius, median of tau_flow / (tau_section * mean_return)
};

/*!
 * Section reduction for a suspension flow with section Sigma = {height 0} and
 * targets S_r = base ball of radius r around `center`.
 *
 * Each trajectory starts on Sigma at an invariant base point. The flow is
 * integrated in fixed steps of at most half the minimal roof with exact
 * crossing bookkeeping, while the induced map is iterated on its own and its
 * roof values are summed; the residual compares the two clocks.
 */
std::vector<SectionRecord> section_trajectories(const systems::SuspensionSpec& spec, const TargetFamily& target,
                                                const RadiusSchedule& schedule, const TMaxRule& rule,
                                                std::uint64_t seed, std::uint64_t first, std::uint64_t count,
                                                int workers);

SectionReport section_report(const systems::SuspensionSpec& spec, const std::vector<SectionRecord>& records,
                             const RadiusSchedule& schedule, std::uint64_t seed);

SectionReport section_check(const systems::SuspensionSpec& spec, const TargetFamily& target,
                            const RadiusSchedule& schedule, std::uint64_t ensemble, const TMaxRule& rule,
                            std::uint64_t seed, int workers);

} // namespace loglaw::estimators
