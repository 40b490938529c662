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

#include "loglaw/estimators/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw::estimators {

namespace {

constexpr std::uint64_t kBlock = 8192;
constexpr double kSupraNoise = 3.0;

struct Toral {
    double v[2];
    int n;
};

Toral toral_coords(const PhasePoint& x)
{
    if (const auto* p = std::get_if<systems::TorusPoint>(&x))
        return {{systems::from_fixed(p->x), systems::from_fixed(p->y)}, 2};
    if (const auto* p = std::get_if<systems::DyadicPoint>(&x))
        return {{systems::from_fixed(p->x), 0.0}, 1};
    if (const auto* p = std::get_if<systems::CirclePoint>(&x))
        return {{systems::from_fixed(p->x), 0.0}, 1};
    if (const auto* p = std::get_if<systems::PlanarTorusPoint>(&x))
        return {{p->x, p->y}, 2};
    if (const auto* p = std::get_if<systems::SuspensionPoint>(&x))
        return toral_coords(std::visit([](const auto& b) -> PhasePoint { return b; }, p->base));
    throw InvalidArgument("toral observables are not defined on hyperbolic states");
}

struct Moments {
    double sum_f = 0.0;
    std::vector<double> sum_g;
    std::vector<double> sum_prod;
    std::vector<double> sum_prod_sq;
};

// f(x) and g(Phi^t x) for every grid time.
void evaluate(const SystemModel& model, const Observable& f, const Observable& g, const std::vector<double>& t_grid,
              const PhasePoint& x0, double& fx, std::vector<double>& gt)
{
    fx = f.f(x0);
    PhasePoint x = x0;
    double t = 0.0;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        if (t_grid[k] > t) {
            x = advance(model, x, t_grid[k] - t);
            t = t_grid[k];
        }
        gt[k] = g.f(x);
    }
}

template <class Kernel>
CorrelationCurve run_correlation(Kernel&& kernel, const SystemModel& model, const Observable& f, const Observable& g,
                                 const std::vector<double>& t_grid, std::uint64_t n, const RngStream& rng)
{
    if (n < 2)
        throw InvalidArgument("correlation_curve needs n >= 2");
    if (t_grid.empty())
        throw InvalidArgument("correlation_curve needs a non-empty time grid");
    for (std::size_t k = 0; k < t_grid.size(); ++k)
        if (!(t_grid[k] >= 0.0) || (k > 0 && !(t_grid[k] > t_grid[k - 1])))
            throw InvalidArgument("correlation time grid must be non-negative and increasing");
    const std::size_t m = t_grid.size();
    const std::uint64_t blocks = (n + kBlock - 1) / kBlock;

    // first pass: means
    auto first = [&](std::size_t b) {
        Moments mo;
        mo.sum_g.assign(m, 0.0);
        std::vector<double> gt(m);
        double fx;
        const std::uint64_t lo = b * kBlock, hi = std::min<std::uint64_t>(n, lo + kBlock);
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream r = rng.split(i);
            evaluate(model, f, g, t_grid, sample_point(model, r), fx, gt);
            mo.sum_f += fx;
            for (std::size_t k = 0; k < m; ++k)
                mo.sum_g[k] += gt[k];
        }
        return mo;
    };
    const auto pass1 = kernel(static_cast<std::size_t>(blocks), first);
    const double nn = static_cast<double>(n);
    double mean_f = 0.0;
    std::vector<double> mean_g(m, 0.0);
    for (const auto& mo : pass1) {
        mean_f += mo.sum_f;
        for (std::size_t k = 0; k < m; ++k)
            mean_g[k] += mo.sum_g[k];
    }
    mean_f /= nn;
    for (double& v : mean_g)
        v /= nn;

    // second pass: centered products on the regenerated samples
    auto second = [&](std::size_t b) {
        Moments mo;
        mo.sum_prod.assign(m, 0.0);
        mo.sum_prod_sq.assign(m, 0.0);
        std::vector<double> gt(m);
        double fx;
        double sf2 = 0.0;
        const std::uint64_t lo = b * kBlock, hi = std::min<std::uint64_t>(n, lo + kBlock);
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream r = rng.split(i);
            evaluate(model, f, g, t_grid, sample_point(model, r), fx, gt);
            const double cf = fx - mean_f;
            sf2 += cf * cf;
            for (std::size_t k = 0; k < m; ++k) {
                const double p = cf * (gt[k] - mean_g[k]);
                mo.sum_prod[k] += p;
                mo.sum_prod_sq[k] += p * p;
            }
        }
        mo.sum_f = sf2;
        return mo;
    };
    const auto pass2 = kernel(static_cast<std::size_t>(blocks), second);
    std::vector<double> sp(m, 0.0), sq(m, 0.0);
    double var_f = 0.0;
    for (const auto& mo : pass2) {
        var_f += mo.sum_f;
        for (std::size_t k = 0; k < m; ++k) {
            sp[k] += mo.sum_prod[k];
            sq[k] += mo.sum_prod_sq[k];
        }
    }
    if (!(var_f > 0.0))
        throw InvalidArgument("correlation observable f has zero variance on the sample");

    CorrelationCurve curve;
    curve.t = t_grid;
    for (std::size_t k = 0; k < m; ++k) {
        const double c = sp[k] / nn;
        const double var = std::max(0.0, sq[k] / nn - c * c);
        curve.c.push_back(c);
        curve.stderr_c.push_back(std::sqrt(var / nn));
    }
    for (std::size_t k = 0; k < m; ++k)
        if (t_grid[k] > 0.0 || m == 1)
            curve.noise_floor = std::max(curve.noise_floor, curve.stderr_c[k]);
    classify_decay(curve);
    return curve;
}

bool significant(const LineFit& fit)
{
    return fit.slope + 3.0 * fit.stderr_slope < 0.0 && fit.r_squared >= 0.5;
}

} // namespace

Observable constant_observable(double value)
{
    return {"constant", [value](const PhasePoint&) { return value; }};
}

Observable cosine_observable(int axis)
{
    if (axis < 0 || axis > 1)
        throw InvalidArgument("cosine observable axis must be 0 or 1");
    return {"cos" + std::to_string(axis), [axis](const PhasePoint& x) {
                const Toral c = toral_coords(x);
                if (axis >= c.n)
                    throw InvalidArgument("cosine observable axis exceeds the toral dimension");
                return std::cos(2.0 * std::numbers::pi * c.v[axis]);
            }};
}

Observable cone_observable(std::vector<double> center, double height)
{
    if (center.empty() || center.size() > 2 || !(height > 0.0))
        throw InvalidArgument("cone observable needs a 1- or 2-dimensional center and positive height");
    return {"cone", [center, height](const PhasePoint& x) {
                const Toral c = toral_coords(x);
                if (static_cast<std::size_t>(c.n) != center.size())
                    throw InvalidArgument("cone center dimension does not match the state");
                double d2 = 0.0;
                for (int i = 0; i < c.n; ++i) {
                    const double d = systems::circle_distance(c.v[i], center[static_cast<std::size_t>(i)]);
                    d2 += d * d;
                }
                return std::max(0.0, height - std::sqrt(d2));
            }};
}

std::string to_string(DecayClass c)
{
    switch (c) {
    case DecayClass::exponential:
        return "exponential";
    case DecayClass::polynomial:
        return "polynomial";
    case DecayClass::none:
        return "none";
    case DecayClass::inconclusive:
        break;
    }
    return "inconclusive";
}

void classify_decay(CorrelationCurve& curve)
{
    std::vector<std::pair<double, double>> exp_pts, poly_pts;
    for (std::size_t k = 0; k < curve.t.size(); ++k) {
        const double a = std::abs(curve.c[k]);
        if (a > kSupraNoise * curve.noise_floor && a > 0.0) {
            exp_pts.emplace_back(curve.t[k], std::log(a));
            poly_pts.emplace_back(std::log1p(curve.t[k]), std::log(a));
        }
    }
    curve.supra_noise_points = exp_pts.size();
    curve.exponential_fitted = curve.polynomial_fitted = false;
    if (exp_pts.size() < 4) {
        curve.classification = DecayClass::inconclusive;
        curve.rate = 0.0;
        return;
    }
    curve.exponential_fit = loglog_fit(exp_pts);
    curve.polynomial_fit = loglog_fit(poly_pts);
    curve.exponential_fitted = curve.polynomial_fitted = true;
    const bool e = significant(curve.exponential_fit);
    const bool p = significant(curve.polynomial_fit);
    if (!e && !p) {
        curve.classification = DecayClass::none;
        curve.rate = 0.0;
    } else if (e && (!p || curve.exponential_fit.r_squared >= curve.polynomial_fit.r_squared)) {
        curve.classification = DecayClass::exponential;
        curve.rate = -curve.exponential_fit.slope;
    } else {
        curve.classification = DecayClass::polynomial;
        curve.rate = -curve.polynomial_fit.slope;
    }
}

CorrelationCurve correlation_curve(const SystemModel& model, const Observable& f, const Observable& g,
                                   const std::vector<double>& t_grid, std::uint64_t n, const RngStream& rng,
                                   int workers)
{
    return run_correlation([workers](std::size_t count, auto& fn) { return parallel::map_indexed(count, workers, fn); },
                           model, f, g, t_grid, n, rng);
}

CorrelationCurve correlation_curve_serial(const SystemModel& model, const Observable& f, const Observable& g,
                                          const std::vector<double>& t_grid, std::uint64_t n, const RngStream& rng)
{
    return run_correlation([](std::size_t count, auto& fn) { return parallel::map_indexed_serial(count, fn); }, model,
                           f, g, t_grid, n, rng);
}

} // namespace loglaw::estimators
