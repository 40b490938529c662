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

#include "loglaw/core/rng.hpp"
#include "loglaw/estimators/fit.hpp"
#include "loglaw/hyperbolic/ball_scan.hpp"

namespace loglaw::estimators {

struct ExcursionCurve {
    std::uint64_t trajectory_id = 0;
    std::vector<double> t;
    std::vector<double> d_t;             ///< running minimum of the base distance to p
    std::vector<double> ratio;           ///< -log d_t / log t
    std::vector<double> local_min_ratio; ///< lim-sup variant over local minima
    LineFit exponent;                    ///< slope of -log d_t against log t
    bool exponent_fitted = false;
};

/// Running-minimum excursion curve of the orbit of u0 relative to cache.center().
ExcursionCurve excursion_curve(const hyperbolic::FuchsianDomain& dom, const hyperbolic::UnitTangent& u0,
                               const hyperbolic::TranslateCache& cache, const std::vector<double>& t_grid);

struct ExcursionEnsemble {
    std::vector<ExcursionCurve> curves;
    std::vector<double> final_ratio;
    double fraction_in_band = 0.0; ///< share of final ratios inside [band_lo, band_hi]
    double median_final_ratio = 0.0;
};

/// Trajectory i starts from a Liouville sample drawn from rng_stream(seed, first + i).
ExcursionEnsemble excursion_ensemble(const hyperbolic::FuchsianDomain& dom, const hyperbolic::TranslateCache& cache,
                                     const std::vector<double>& t_grid, std::uint64_t seed, std::uint64_t first,
                                     std::uint64_t count, int workers, double band_lo = 0.8, double band_hi = 1.2);

struct CuspCurve {
    std::uint64_t trajectory_id = 0;
    std::vector<double> t;
    std::vector<double> max_dist;  ///< running maximum of d(p, base orbit)
    std::vector<double> statistic; ///< max_dist / log t
};

/// Cusp excursions on the modular surface, sampled every `step` time units.
CuspCurve cusp_excursion(const hyperbolic::FuchsianDomain& dom, const hyperbolic::UnitTangent& u0,
                         const std::vector<double>& t_grid, double step = 0.25);

std::vector<CuspCurve> cusp_ensemble(const hyperbolic::FuchsianDomain& dom, const std::vector<double>& t_grid,
                                     std::uint64_t seed, std::uint64_t first, std::uint64_t count, int workers,
                                     double step = 0.25);

/// Increasing grid of `count` points from t0 to t1, geometrically spaced.
std::vector<double> geometric_grid(double t0, double t1, std::size_t count);

} // namespace loglaw::estimators
