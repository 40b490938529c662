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
#include <functional>
#include <string>
#include <vector>

#include "loglaw/core/system_model.hpp"
#include "loglaw/estimators/fit.hpp"

namespace loglaw::estimators {

/// Bounded Lipschitz test function on phase space.
struct Observable {
    std::string name;
    std::function<double(const PhasePoint&)> f;
};

Observable constant_observable(double value);
/// cos(2 pi x_axis) of a toral coordinate.
Observable cosine_observable(int axis = 0);
/// max(0, height - d(x, center)) with the flat distance of the toral coordinates (one or two of them).
Observable cone_observable(std::vector<double> center, double height);

enum class DecayClass { exponential, polynomial, none, inconclusive };

std::string to_string(DecayClass c);

/*!
 * Sampled correlation C(t) = E[f g(Phi^t)] - E f E g.
 *
 * noise_floor is the largest Monte Carlo standard error over grid times
 * t > 0. Only points with |C(t)| > 3 noise_floor enter the classification:
 * log|C| is regressed on t (exponential) and on log(1 + t) (polynomial); a
 * model counts when its slope is negative by more than 3 standard errors and
 * its r^2 is at least 0.5, and the better r^2 wins. Fewer than 4 such points
 * give `inconclusive`.
 */
struct CorrelationCurve {
    std::vector<double> t;
    std::vector<double> c;
    std::vector<double> stderr_c;
    double noise_floor = 0.0;
    DecayClass classification = DecayClass::inconclusive;
    double rate = 0.0; ///< decay rate of the chosen model (exponential rate or polynomial power)
    std::size_t supra_noise_points = 0;
    LineFit exponential_fit;
    LineFit polynomial_fit;
    bool exponential_fitted = false;
    bool polynomial_fitted = false;
};

/// Classification step alone, on given values.
void classify_decay(CorrelationCurve& curve);

CorrelationCurve correlation_curve(const SystemModel& model, const Observable& f, const Observable& g,
                                   const std::vector<double>& t_grid, std::uint64_t n, const RngStream& rng,
                                   int workers);
CorrelationCurve correlation_curve_serial(const SystemModel& model, const Observable& f, const Observable& g,
                                          const std::vector<double>& t_grid, std::uint64_t n, const RngStream& rng);

} // namespace loglaw::estimators
