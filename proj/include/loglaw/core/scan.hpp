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

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "loglaw/core/error.hpp"

namespace loglaw {

/// Tuning of the Lipschitz scanner.
struct ScanOptions {
    double lipschitz = 1.0;        ///< bound on |d/dt f(Phi^t x)|
    double window_fraction = 0.25; ///< window length r * window_fraction / lipschitz near the target
    double tolerance = 1e-3;       ///< entry times refined to r * tolerance / lipschitz
    double level_cap = INFINITY;   ///< level values at or above the cap are lower bounds only
};

inline void check_radii(const std::vector<double>& radii)
{
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (!(radii[j] > 0.0) || !std::isfinite(radii[j]))
            throw InvalidArgument("target radii must be positive and finite");
        if (j > 0 && !(radii[j] < radii[j - 1]))
            throw InvalidArgument("target radii must be strictly decreasing");
    }
}

namespace detail {

template <class State, class Level, class Advance>
std::optional<double> first_below(const State& a, double fa, double width, double fb, double r, Level& level,
                                  Advance& advance, const ScanOptions& opt, double tol)
{
    if (fa < r)
        return 0.0;
    if (0.5 * (fa + fb - opt.lipschitz * width) >= r)
        return std::nullopt;
    const double half = 0.5 * width;
    const State mid = advance(a, half);
    const double fm = std::fmin(level(mid), opt.level_cap);
    if (width <= tol) {
        if (fm < r)
            return half;
        if (fb < r)
            return width;
        return std::nullopt;
    }
    if (auto left = first_below(a, fa, half, fm, r, level, advance, opt, tol))
        return left;
    if (auto right = first_below(mid, fm, half, fb, r, level, advance, opt, tol))
        return half + *right;
    return std::nullopt;
}

} // namespace detail

/*!
 * First entry times of a continuous-time orbit into nested sublevel sets
 * {f < r_j}, radii strictly decreasing.
 *
 * Far from the target the scanner jumps by (f - r) / L, which cannot skip an
 * entry because f changes at rate at most L. Within r / (4 L) of the level it
 * checks windows of that length: a window is certified empty when the
 * Lipschitz lower bound (f_a + f_b - L w) / 2 is at least r, and otherwise is
 * bisected until the entry is located to the tolerance. Entries after t_max
 * are nullopt.
 *
 * `advance(state, dt)` must return Phi^dt(state); `level(state)` returns f.
 */
template <class State, class Level, class Advance>
std::vector<std::optional<double>> lipschitz_scan(State x, Level&& level, Advance&& advance,
                                                  const std::vector<double>& radii, double t_max,
                                                  const ScanOptions& opt = {})
{
    check_radii(radii);
    if (!(opt.lipschitz > 0.0))
        throw InvalidArgument("lipschitz_scan: Lipschitz constant must be positive");
    std::vector<std::optional<double>> out(radii.size());
    std::size_t next = 0;
    double t = 0.0;
    double f = std::fmin(level(x), opt.level_cap);
    while (next < radii.size()) {
        const double r = radii[next];
        if (f < r) {
            if (t > t_max)
                break;
            out[next++] = t;
            continue;
        }
        if (t > t_max)
            break;
        const double gap = (f - r) / opt.lipschitz;
        const double window = r * opt.window_fraction / opt.lipschitz;
        if (gap > window) {
            x = advance(x, gap);
            t += gap;
            f = std::fmin(level(x), opt.level_cap);
            continue;
        }
        State end = advance(x, window);
        const double fb = std::fmin(level(end), opt.level_cap);
        const double tol = r * opt.tolerance / opt.lipschitz;
        if (auto hit = detail::first_below(x, f, window, fb, r, level, advance, opt, tol)) {
            if (t + *hit > t_max)
                break;
            out[next++] = t + *hit;
            continue;
        }
        x = std::move(end);
        t += window;
        f = fb;
    }
    return out;
}

/// Same contract for maps: n = 0, 1, 2, ... up to floor(t_max), f evaluated at every iterate.
template <class State, class Level, class Step>
std::vector<std::optional<double>> map_scan(State x, Level&& level, Step&& step, const std::vector<double>& radii,
                                            double t_max)
{
    check_radii(radii);
    std::vector<std::optional<double>> out(radii.size());
    std::size_t next = 0;
    for (double n = 0.0; n <= t_max; n += 1.0) {
        const double f = level(x);
        while (next < radii.size() && f < radii[next])
            out[next++] = n;
        if (next == radii.size())
            break;
        x = step(x);
    }
    return out;
}

} // namespace loglaw
