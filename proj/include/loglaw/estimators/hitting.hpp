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
#include <string>
#include <vector>

#include "loglaw/core/target.hpp"
#include "loglaw/estimators/fit.hpp"

namespace loglaw::estimators {

/// Strictly decreasing target radii above the resolution floor 1e-9.
class RadiusSchedule {
public:
    explicit RadiusSchedule(std::vector<double> l_values);
    static RadiusSchedule geometric(double l0, double ratio, int count);

    const std::vector<double>& values() const noexcept { return l_; }
    std::size_t size() const noexcept { return l_.size(); }

private:
    std::vector<double> l_;
};

struct HitRecord {
    std::uint64_t trajectory_id = 0;
    double l = 0.0;
    double tau = 0.0;
    bool censored = false;
};

/// Simulation budget t_max(l) = factor * l^(-d_expected); maps round down to whole steps.
struct TMaxRule {
    double factor = 100.0;
    double d_expected = 1.0;
    double operator()(double l, bool integral) const;
};

struct RadiusSummary {
    double l = 0.0;
    std::size_t samples = 0;
    std::size_t censored = 0;
    double median_log_tau = 0.0;
    bool used = false;
};

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double r_squared = 0.0;
    std::vector<RadiusSummary> radii;
    std::vector<std::string> warnings;
};

/// Hit records of one orbit for every radius in the schedule, in schedule order.
std::vector<HitRecord> hitting_times(const SystemModel& model, const PhasePoint& x0, const TargetFamily& target,
                                     const RadiusSchedule& schedule, const std::vector<double>& t_max,
                                     std::uint64_t trajectory_id = 0);

/// Single-radius convenience.
HitRecord hitting_time(const SystemModel& model, const PhasePoint& x0, const TargetFamily& target, double l,
                       double t_max);

/// Starting point of trajectory i: one invariant draw from rng_stream(seed, i).
PhasePoint trajectory_start(const SystemModel& model, std::uint64_t seed, std::uint64_t trajectory_id);

/*!
 * Hit records for trajectories [first, first + count), ordered by trajectory
 * then by schedule position. The OpenMP kernel and the serial reference
 * produce identical vectors.
 */
std::vector<HitRecord> hitting_ensemble(const SystemModel& model, const TargetFamily& target,
                                        const RadiusSchedule& schedule, const TMaxRule& rule, std::uint64_t seed,
                                        std::uint64_t first, std::uint64_t count, int workers);
std::vector<HitRecord> hitting_ensemble_serial(const SystemModel& model, const TargetFamily& target,
                                               const RadiusSchedule& schedule, const TMaxRule& rule,
                                               std::uint64_t seed, std::uint64_t first, std::uint64_t count);

/*!
 * Regression of the per-radius median of log tau on -log l.
 *
 * Censored records enter the median as +infinity. A radius is dropped (with a
 * warning) when more than 10% of its records are censored or its median is
 * not finite. Throws InsufficientData when fewer than 3 radii remain.
 */
ExponentFit fit_hitting_exponent(const std::vector<HitRecord>& records, const RadiusSchedule& schedule);

/// Simulate an ensemble and fit; ensemble must be at least 30.
ExponentFit hitting_exponent(const SystemModel& model, const TargetFamily& target, const RadiusSchedule& schedule,
                             std::uint64_t ensemble, const TMaxRule& rule, std::uint64_t seed, int workers);

/// Per radius, the largest log tau / -log l over uncensored records with tau > 0 (or -inf when none).
std::vector<double> max_log_ratio(const std::vector<HitRecord>& records, const RadiusSchedule& schedule);

} // namespace loglaw::estimators
