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

#include "loglaw/hyperbolic/ball_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "loglaw/core/error.hpp"

namespace loglaw::hyperbolic {

namespace {

constexpr double kWindowMargin = 1e-6;

void check_grid(const std::vector<double>& t_grid)
{
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || !std::isfinite(t_grid[i]))
            throw InvalidArgument("time grid entries must be finite and non-negative");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw InvalidArgument("time grid must be strictly increasing");
    }
}

} // namespace

std::vector<std::optional<double>> ball_entry_scan(const FuchsianDomain& dom, const UnitTangent& u,
                                                   const TranslateCache& cache, const std::vector<double>& radii,
                                                   double t_max)
{
    if (radii.empty())
        return {};
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (!(radii[j] > 0.0))
            throw InvalidArgument("ball_entry_scan: radii must be positive");
        if (j > 0 && !(radii[j] < radii[j - 1]))
            throw InvalidArgument("ball_entry_scan: radii must be strictly decreasing");
    }
    const double window = cache.r_max() - radii.front() - kWindowMargin;
    if (!(window > 0.0))
        throw InvalidArgument("ball_entry_scan: radius exceeds the translate cache budget");

    std::vector<std::optional<double>> out(radii.size());
    const auto& points = cache.points();
    std::vector<PerpendicularFoot> feet(points.size());
    MobiusTransform g = dom.reduce_frame(u.group_element());
    std::size_t next = 0;
    double t = 0.0;
    while (next < radii.size() && t <= t_max) {
        for (std::size_t k = 0; k < points.size(); ++k)
            feet[k] = perpendicular_foot(g, points[k]);
        while (next < radii.size()) {
            const double sh = std::sinh(0.5 * radii[next]);
            const double cosh_r_minus_one = 2.0 * sh * sh;
            double best = std::numeric_limits<double>::infinity();
            for (const PerpendicularFoot& f : feet) {
                const double excess = cosh_r_minus_one - f.cosh_minus_one;
                if (!(excess > 0.0))
                    continue;
                const double half_chord = distance_from_sinh2_half(0.5 * excess / f.cosh_distance);
                if (f.time + half_chord < 0.0)
                    continue;
                best = std::min(best, std::max(0.0, f.time - half_chord));
            }
            if (!(best < window) || t + best > t_max)
                break;
            out[next++] = t + best;
        }
        t += window;
        g = dom.reduce_frame(g * axial_translation(window));
    }
    return out;
}

std::optional<double> ball_entry_scan(const FuchsianDomain& dom, const UnitTangent& u, const TranslateCache& cache,
                                      double r, double t_max)
{
    return ball_entry_scan(dom, u, cache, std::vector<double>{r}, t_max).front();
}

std::optional<double> ball_entry_fine_scan(const FuchsianDomain& dom, const UnitTangent& u,
                                           const TranslateCache& cache, double r, double t_max, double step)
{
    if (!(step > 0.0) || !(r < cache.r_max()))
        throw InvalidArgument("ball_entry_fine_scan: need step > 0 and r < r_max");
    const MobiusTransform start = dom.reduce_frame(u.group_element());
    MobiusTransform anchor = start;
    double anchor_time = 0.0;
    for (long i = 0;; ++i) {
        const double t = static_cast<double>(i) * step;
        if (t > t_max)
            return std::nullopt;
        if (t - anchor_time > 1.0) {
            anchor = dom.reduce_frame(anchor * axial_translation(t - anchor_time));
            anchor_time = t;
        }
        const MobiusTransform g = dom.reduce_frame(anchor * axial_translation(t - anchor_time));
        if (cache.truncated_distance(g.apply(Complex(0.0, 1.0))) < r)
            return t;
    }
}

std::vector<ExcursionPoint> running_minimum_curve(const FuchsianDomain& dom, const UnitTangent& u,
                                                  const TranslateCache& cache, const std::vector<double>& t_grid)
{
    check_grid(t_grid);
    const double max_window = 0.5 * cache.r_max();
    const double log_floor = std::numbers::e;
    const auto& points = cache.points();

    std::vector<ExcursionPoint> out;
    out.reserve(t_grid.size());
    MobiusTransform g = dom.reduce_frame(u.group_element());
    double t = 0.0;
    double running_sinh2 = std::numeric_limits<double>::infinity();
    double best_ratio = -std::numeric_limits<double>::infinity();
    for (double target : t_grid) {
        while (t < target) {
            const double window = std::min(max_window, target - t);
            for (const Complex& w : points) {
                const PerpendicularFoot f = perpendicular_foot(g, w);
                double sinh2;
                if (f.time >= 0.0 && f.time <= window) {
                    sinh2 = 0.5 * f.cosh_minus_one;
                    const double s = t + f.time;
                    if (s >= log_floor && sinh2 > 0.0) {
                        const double d = distance_from_sinh2_half(sinh2);
                        best_ratio = std::max(best_ratio, -std::log(d) / std::log(s));
                    }
                } else {
                    const double at = std::clamp(f.time, 0.0, window) - f.time;
                    const double sh = std::sinh(0.5 * at);
                    sinh2 = 0.5 * (f.cosh_minus_one * std::cosh(at) + 2.0 * sh * sh);
                }
                running_sinh2 = std::min(running_sinh2, sinh2);
            }
            t += window;
            g = dom.reduce_frame(g * axial_translation(window));
        }
        const double d = std::isfinite(running_sinh2) ? std::min(distance_from_sinh2_half(running_sinh2), cache.r_max())
                                                      : cache.r_max();
        out.push_back({target, d, best_ratio});
    }
    return out;
}

std::vector<CuspPoint> running_maximum_curve(const FuchsianDomain& dom, const UnitTangent& u, Complex p,
                                             const std::vector<double>& t_grid, double step)
{
    check_grid(t_grid);
    if (!(step > 0.0))
        throw InvalidArgument("running_maximum_curve: step must be positive");
    std::vector<CuspPoint> out;
    out.reserve(t_grid.size());
    MobiusTransform g = dom.reduce_frame(u.group_element());
    double t = 0.0;
    double running = hyp_distance(g.apply(Complex(0.0, 1.0)), p);
    for (double target : t_grid) {
        while (t < target) {
            const double dt = std::min(step, target - t);
            g = dom.reduce_frame(g * axial_translation(dt));
            t += dt;
            const double d = hyp_distance(g.apply(Complex(0.0, 1.0)), p);
            if (!std::isfinite(d))
                throw NumericDomainError("cusp excursion produced a non-finite distance");
            running = std::max(running, d);
        }
        out.push_back({target, running});
    }
    return out;
}

} // namespace loglaw::hyperbolic
