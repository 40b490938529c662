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

#include "loglaw/hyperbolic/translate_cache.hpp"

namespace loglaw::hyperbolic {

/*!
 * First entry times of the geodesic orbit of u into the quotient balls
 * U_r(p), p = cache.center(), for strictly decreasing radii.
 *
 * The orbit is followed in windows of length cache.r_max() - radii.front().
 * Inside a window every lift of p that the segment can reach is in the cache,
 * and entry into each ball is solved in closed form from the perpendicular
 * foot, so no entry can be skipped. The frame is re-reduced and renormalized
 * at every window boundary. Entries after t_max are reported as nullopt.
 */
std::vector<std::optional<double>> ball_entry_scan(const FuchsianDomain& dom, const UnitTangent& u,
                                                   const TranslateCache& cache, const std::vector<double>& radii,
                                                   double t_max);

std::optional<double> ball_entry_scan(const FuchsianDomain& dom, const UnitTangent& u, const TranslateCache& cache,
                                      double r, double t_max);

/// Brute-force reference: samples the truncated distance every `step` and reports the first sample inside.
std::optional<double> ball_entry_fine_scan(const FuchsianDomain& dom, const UnitTangent& u,
                                           const TranslateCache& cache, double r, double t_max, double step);

/// Running minimum of the base distance to p, evaluated at one grid time.
struct ExcursionPoint {
    double t;
    double running_min;     ///< inf over s <= t of d(base(Phi^s u), p)
    double local_min_ratio; ///< sup over local minima at times s in [e, t] of -log d / log s
};

/*!
 * Running minimum of the distance from the orbit to p, exact over each
 * window from the perpendicular feet of the cached lifts. Values are exact
 * once the running minimum is below cache.r_max() / 2.
 */
std::vector<ExcursionPoint> running_minimum_curve(const FuchsianDomain& dom, const UnitTangent& u,
                                                  const TranslateCache& cache, const std::vector<double>& t_grid);

/// Running maximum of d(base, p) for the reduced orbit, sampled every `step`, reported at grid times.
struct CuspPoint {
    double t;
    double running_max;
};

std::vector<CuspPoint> running_maximum_curve(const FuchsianDomain& dom, const UnitTangent& u, Complex p,
                                             const std::vector<double>& t_grid, double step);

} // namespace loglaw::hyperbolic
