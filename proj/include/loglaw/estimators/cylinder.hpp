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

struct CylinderEstimate {
    double epsilon = 0.0;
    double l = 0.0;
    double mu_hat = 0.0;
    double stderr_mu = 0.0;
    std::uint64_t n = 0;
};

/*!
 * Which cylinders C_{eps,l} contain x, for every pair of the grids
 * (eps-major, result[i * l_grid.size() + j]).
 *
 * Maps: some iterate n < eps lies in B_l. Hyperbolic and linear flows with
 * ball targets: the orbit's closest approach to a lift of the center happens
 * at a time in [0, eps) at distance (base balls) or Sasaki surrogate (Sasaki
 * balls) below l. Suspensions: a roof crossing before eps lands in B_l.
 * Other targets: the orbit enters B_l before eps.
 */
std::vector<bool> cylinder_membership(const SystemModel& model, const TargetFamily& target, const PhasePoint& x,
                                      const std::vector<double>& eps_grid, const std::vector<double>& l_grid);

/*!
 * Monte Carlo estimates of mu(C_{eps,l}) on the whole grid from n invariant
 * samples; sample i is drawn from rng.split(i), and the same samples serve
 * every grid pair. eps-major order.
 */
std::vector<CylinderEstimate> cylinder_grid(const SystemModel& model, const TargetFamily& target,
                                            const std::vector<double>& eps_grid, const std::vector<double>& l_grid,
                                            std::uint64_t n, const RngStream& rng, int workers);
std::vector<CylinderEstimate> cylinder_grid_serial(const SystemModel& model, const TargetFamily& target,
                                                   const std::vector<double>& eps_grid,
                                                   const std::vector<double>& l_grid, std::uint64_t n,
                                                   const RngStream& rng);

CylinderEstimate cylinder_measure(const SystemModel& model, const TargetFamily& target, double epsilon, double l,
                                  std::uint64_t n, const RngStream& rng, int workers = 0);

struct EpsilonSlope {
    double epsilon = 0.0;
    LineFit fit;
    bool fitted = false;
    std::vector<double> dropped_l;
};

/*!
 * Per-eps regression of log mu_hat on log l. d is the slope at the smallest
 * eps; stability_gap is the largest pairwise difference between per-eps
 * slopes.
 */
struct ConditionalDimension {
    std::vector<EpsilonSlope> per_epsilon;
    double d = 0.0;
    double stability_gap = 0.0;
    std::vector<std::string> warnings;
};

ConditionalDimension conditional_dimension_from(const std::vector<CylinderEstimate>& estimates);

ConditionalDimension conditional_dimension(const SystemModel& model, const TargetFamily& target,
                                           const std::vector<double>& eps_grid, const std::vector<double>& l_grid,
                                           std::uint64_t n, const RngStream& rng, int workers,
                                           std::vector<CylinderEstimate>* estimates = nullptr);

} // namespace loglaw::estimators
