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

#include "loglaw/estimators/excursion.hpp"

#include <cmath>
#include <limits>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"

namespace loglaw::estimators {

namespace {

void check_grid(const std::vector<double>& t_grid)
{
    if (t_grid.empty())
        throw InvalidArgument("time grid is empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 1.0) || !std::isfinite(t_grid[i]))
            throw InvalidArgument("time grid values must be finite and exceed 1");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw InvalidArgument("time grid must be strictly increasing");
    }
}

} // namespace

ExcursionCurve excursion_curve(const hyperbolic::FuchsianDomain& dom, const hyperbolic::UnitTangent& u0,
                               const hyperbolic::TranslateCache& cache, const std::vector<double>& t_grid)
{
    check_grid(t_grid);
    ExcursionCurve out;
    const auto pts = hyperbolic::running_minimum_curve(dom, u0, cache, t_grid);
    std::vector<std::pair<double, double>> fit_points;
    for (const auto& p : pts) {
        out.t.push_back(p.t);
        out.d_t.push_back(p.running_min);
        const double ratio = p.running_min > 0.0 ? -std::log(p.running_min) / std::log(p.t)
                                                 : std::numeric_limits<double>::infinity();
        out.ratio.push_back(ratio);
        out.local_min_ratio.push_back(p.local_min_ratio);
        if (p.running_min > 0.0)
            fit_points.emplace_back(std::log(p.t), -std::log(p.running_min));
    }
    if (fit_points.size() >= 3) {
        try {
            out.exponent = loglog_fit(fit_points);
            out.exponent_fitted = true;
        } catch (const InsufficientData&) {
        }
    }
    return out;
}

ExcursionEnsemble excursion_ensemble(const hyperbolic::FuchsianDomain& dom, const hyperbolic::TranslateCache& cache,
                                     const std::vector<double>& t_grid, std::uint64_t seed, std::uint64_t first,
                                     std::uint64_t count, int workers, double band_lo, double band_hi)
{
    check_grid(t_grid);
    ExcursionEnsemble out;
    out.curves = parallel::map_indexed(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
        RngStream rng = rng_stream(seed, first + i);
        ExcursionCurve c = excursion_curve(dom, dom.liouville_sample(rng), cache, t_grid);
        c.trajectory_id = first + i;
        return c;
    });
    std::size_t inside = 0;
    for (const auto& c : out.curves) {
        const double r = c.ratio.back();
        out.final_ratio.push_back(r);
        if (r >= band_lo && r <= band_hi)
            ++inside;
    }
    if (!out.curves.empty()) {
        out.fraction_in_band = static_cast<double>(inside) / static_cast<double>(out.curves.size());
        out.median_final_ratio = median(out.final_ratio);
    }
    return out;
}

CuspCurve cusp_excursion(const hyperbolic::FuchsianDomain& dom, const hyperbolic::UnitTangent& u0,
                         const std::vector<double>& t_grid, double step)
{
    if (dom.variant() != hyperbolic::DomainVariant::modular)
        throw InvalidArgument("cusp excursions are defined for the modular surface only");
    check_grid(t_grid);
    CuspCurve out;
    for (const auto& p : hyperbolic::running_maximum_curve(dom, u0, dom.reference_point(), t_grid, step)) {
        out.t.push_back(p.t);
        out.max_dist.push_back(p.running_max);
        out.statistic.push_back(p.running_max / std::log(p.t));
    }
    return out;
}

std::vector<CuspCurve> cusp_ensemble(const hyperbolic::FuchsianDomain& dom, const std::vector<double>& t_grid,
                                     std::uint64_t seed, std::uint64_t first, std::uint64_t count, int workers,
                                     double step)
{
    return parallel::map_indexed(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
        RngStream rng = rng_stream(seed, first + i);
        CuspCurve c = cusp_excursion(dom, dom.liouville_sample(rng), t_grid, step);
        c.trajectory_id = first + i;
        return c;
    });
}

std::vector<double> geometric_grid(double t0, double t1, std::size_t count)
{
    if (!(t0 > 0.0) || !(t1 > t0) || count < 2)
        throw InvalidArgument("geometric grid needs 0 < t0 < t1 and at least two points");
    std::vector<double> out(count);
    const double step = std::log(t1 / t0) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = t0 * std::exp(step * static_cast<double>(i));
    out.back() = t1;
    return out;
}

} // namespace loglaw::estimators
