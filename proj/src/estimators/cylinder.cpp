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

#include "loglaw/estimators/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"
#include "loglaw/core/scan.hpp"
#include "loglaw/estimators/detection.hpp"

namespace loglaw::estimators {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kBlock = 4096;

double max_of(const std::vector<double>& v)
{
    return *std::max_element(v.begin(), v.end());
}

// m[i] = smallest level reached in the section sense before eps_grid[i].
void record_event(std::vector<double>& m, const std::vector<double>& eps_grid, double time, double level)
{
    for (std::size_t i = 0; i < eps_grid.size(); ++i)
        if (time < eps_grid[i])
            m[i] = std::min(m[i], level);
}

void map_minima(const SystemModel& model, const TargetFamily& target, const PhasePoint& x,
                const std::vector<double>& eps_grid, std::vector<double>& m)
{
    for (double e : eps_grid)
        if (e != std::floor(e) || e < 1.0)
            throw InvalidArgument("map cylinders need whole-number eps >= 1");
    const auto steps = static_cast<long>(max_of(eps_grid));
    PhasePoint p = x;
    for (long n = 0; n < steps; ++n) {
        if (n > 0)
            p = advance(model, p, 1.0);
        record_event(m, eps_grid, static_cast<double>(n), target.level(p));
    }
}

void hyperbolic_minima(const hyperbolic::FuchsianDomain& dom, const TargetFamily& target, const PhasePoint& x,
                       const std::vector<double>& eps_grid, double l_max, std::vector<double>& m)
{
    const hyperbolic::TranslateCache& cache = *target.cache();
    const double eps_max = max_of(eps_grid);
    if (eps_max + l_max > cache.r_max())
        throw InvalidArgument("cylinder grid exceeds the translate cache budget: need eps + l <= r_max");
    const hyperbolic::MobiusTransform g = dom.reduce_frame(std::get<hyperbolic::UnitTangent>(x).group_element());
    const auto& points = cache.points();
    const double sh = std::sinh(0.5 * l_max);
    const double cosh_l_minus_one = 2.0 * sh * sh;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const hyperbolic::PerpendicularFoot f = hyperbolic::perpendicular_foot(g, points[k]);
        if (!(f.time >= 0.0 && f.time < eps_max) || !(f.cosh_minus_one < cosh_l_minus_one))
            continue;
        double level;
        if (target.kind() == TargetKind::sasaki_ball)
            level = hyperbolic::sasaki_distance(g * hyperbolic::axial_translation(f.time), target.sasaki_frames()[k]);
        else
            level = f.distance();
        record_event(m, eps_grid, f.time, level);
    }
}

void linear_flow_minima(const systems::LinearTorusFlowSpec& spec, const TargetFamily& target, const PhasePoint& x,
                        const std::vector<double>& eps_grid, double l_max, std::vector<double>& m)
{
    const auto& p = std::get<systems::PlanarTorusPoint>(x);
    const auto& c = std::get<systems::PlanarTorusPoint>(target.center());
    const double reach = max_of(eps_grid) + l_max;
    const auto kx_lo = static_cast<long>(std::ceil(p.x - reach - c.x));
    const auto kx_hi = static_cast<long>(std::floor(p.x + reach - c.x));
    const auto ky_lo = static_cast<long>(std::ceil(p.y - reach - c.y));
    const auto ky_hi = static_cast<long>(std::floor(p.y + reach - c.y));
    for (long kx = kx_lo; kx <= kx_hi; ++kx) {
        for (long ky = ky_lo; ky <= ky_hi; ++ky) {
            const double qx = c.x + static_cast<double>(kx) - p.x;
            const double qy = c.y + static_cast<double>(ky) - p.y;
            const double t0 = qx * spec.vx + qy * spec.vy;
            if (!(t0 >= 0.0))
                continue;
            const double perp = std::abs(qx * spec.vy - qy * spec.vx);
            record_event(m, eps_grid, t0, perp);
        }
    }
}

void suspension_minima(const systems::SuspensionSpec& spec, const TargetFamily& target, const PhasePoint& x,
                       const std::vector<double>& eps_grid, std::vector<double>& m)
{
    const auto& s = std::get<systems::SuspensionPoint>(x);
    const double eps_max = max_of(eps_grid);
    systems::BasePoint base = s.base;
    double t = spec.roof(base) - s.height;
    while (t < eps_max) {
        base = systems::base_step(spec.base, base);
        record_event(m, eps_grid, t, target.level(systems::SuspensionPoint{base, 0.0}));
        t += spec.roof(base);
    }
}

} // namespace

std::vector<bool> cylinder_membership(const SystemModel& model, const TargetFamily& target, const PhasePoint& x,
                                      const std::vector<double>& eps_grid, const std::vector<double>& l_grid)
{
    if (eps_grid.empty() || l_grid.empty())
        throw InvalidArgument("cylinder grids must be non-empty");
    for (double e : eps_grid)
        if (!(e > 0.0) || !std::isfinite(e))
            throw InvalidArgument("cylinder eps must be positive and finite");
    check_radii(l_grid);
    const double l_max = l_grid.front();

    std::vector<bool> out(eps_grid.size() * l_grid.size(), false);
    std::vector<double> m(eps_grid.size(), kInf);
    bool section = true;
    const auto* lin = std::get_if<systems::LinearTorusFlowSpec>(&model.spec());
    const auto* sus = std::get_if<systems::SuspensionSpec>(&model.spec());
    if (model.kind() == SystemKind::map) {
        map_minima(model, target, x, eps_grid, m);
    } else if (model.domain() != nullptr && target.kind() != TargetKind::sublevel) {
        hyperbolic_minima(*model.domain(), target, x, eps_grid, l_max, m);
    } else if (lin != nullptr && target.kind() == TargetKind::base_ball) {
        linear_flow_minima(*lin, target, x, eps_grid, l_max, m);
    } else if (sus != nullptr && target.kind() == TargetKind::base_ball) {
        suspension_minima(*sus, target, x, eps_grid, m);
    } else {
        section = false;
        const auto entries = first_entries(model, target, x, l_grid, max_of(eps_grid));
        for (std::size_t i = 0; i < eps_grid.size(); ++i)
            for (std::size_t j = 0; j < l_grid.size(); ++j)
                out[i * l_grid.size() + j] = entries[j].has_value() && *entries[j] < eps_grid[i];
    }
    if (section)
        for (std::size_t i = 0; i < eps_grid.size(); ++i)
            for (std::size_t j = 0; j < l_grid.size(); ++j)
                out[i * l_grid.size() + j] = m[i] < l_grid[j];
    return out;
}

namespace {

template <class Kernel>
std::vector<CylinderEstimate> run_grid(Kernel&& kernel, const SystemModel& model, const TargetFamily& target,
                                       const std::vector<double>& eps_grid, const std::vector<double>& l_grid,
                                       std::uint64_t n, const RngStream& rng)
{
    if (n < 1)
        throw InvalidArgument("cylinder estimate needs n >= 1");
    const std::size_t cells = eps_grid.size() * l_grid.size();
    const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
    auto block = [&](std::size_t b) {
        std::vector<std::uint64_t> hits(cells, 0);
        const std::uint64_t lo = b * kBlock;
        const std::uint64_t hi = std::min<std::uint64_t>(n, lo + kBlock);
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream sample_rng = rng.split(i);
            const PhasePoint x = sample_point(model, sample_rng);
            const std::vector<bool> in = cylinder_membership(model, target, x, eps_grid, l_grid);
            for (std::size_t c = 0; c < cells; ++c)
                hits[c] += in[c] ? 1 : 0;
        }
        return hits;
    };
    const auto per_block = kernel(static_cast<std::size_t>(blocks), block);
    std::vector<std::uint64_t> total(cells, 0);
    for (const auto& h : per_block)
        for (std::size_t c = 0; c < cells; ++c)
            total[c] += h[c];

    std::vector<CylinderEstimate> out;
    out.reserve(cells);
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        for (std::size_t j = 0; j < l_grid.size(); ++j) {
            const double p = static_cast<double>(total[i * l_grid.size() + j]) / nn;
            out.push_back({eps_grid[i], l_grid[j], p, std::sqrt(p * (1.0 - p) / nn), n});
        }
    }
    return out;
}

} // namespace

std::vector<CylinderEstimate> cylinder_grid(const SystemModel& model, const TargetFamily& target,
                                            const std::vector<double>& eps_grid, const std::vector<double>& l_grid,
                                            std::uint64_t n, const RngStream& rng, int workers)
{
    return run_grid([workers](std::size_t count, auto& fn) { return parallel::map_indexed(count, workers, fn); },
                    model, target, eps_grid, l_grid, n, rng);
}

std::vector<CylinderEstimate> cylinder_grid_serial(const SystemModel& model, const TargetFamily& target,
                                                   const std::vector<double>& eps_grid,
                                                   const std::vector<double>& l_grid, std::uint64_t n,
                                                   const RngStream& rng)
{
    return run_grid([](std::size_t count, auto& fn) { return parallel::map_indexed_serial(count, fn); }, model,
                    target, eps_grid, l_grid, n, rng);
}

CylinderEstimate cylinder_measure(const SystemModel& model, const TargetFamily& target, double epsilon, double l,
                                  std::uint64_t n, const RngStream& rng, int workers)
{
    if (!(epsilon > 0.0))
        throw InvalidArgument("cylinder_measure: eps must be positive");
    if (n < 1000)
        throw InvalidArgument("cylinder_measure: n must be at least 1000");
    return cylinder_grid(model, target, {epsilon}, {l}, n, rng, workers).front();
}

ConditionalDimension conditional_dimension_from(const std::vector<CylinderEstimate>& estimates)
{
    ConditionalDimension out;
    std::vector<double> eps_order;
    for (const auto& e : estimates)
        if (std::find(eps_order.begin(), eps_order.end(), e.epsilon) == eps_order.end())
            eps_order.push_back(e.epsilon);
    for (double eps : eps_order) {
        EpsilonSlope s;
        s.epsilon = eps;
        std::vector<std::pair<double, double>> points;
        for (const auto& e : estimates) {
            if (e.epsilon != eps)
                continue;
            if (e.mu_hat > 0.0)
                points.emplace_back(std::log(e.l), std::log(e.mu_hat));
            else
                s.dropped_l.push_back(e.l);
        }
        if (!s.dropped_l.empty())
            out.warnings.push_back("eps " + std::to_string(eps) + ": " + std::to_string(s.dropped_l.size()) +
                                   " radii with zero hits dropped");
        if (points.size() >= 3) {
            s.fit = loglog_fit(points);
            s.fitted = true;
        } else {
            out.warnings.push_back("eps " + std::to_string(eps) + ": fewer than 3 usable radii");
        }
        out.per_epsilon.push_back(std::move(s));
    }
    const EpsilonSlope* smallest = nullptr;
    for (const auto& s : out.per_epsilon) {
        if (!s.fitted)
            continue;
        if (smallest == nullptr || s.epsilon < smallest->epsilon)
            smallest = &s;
        for (const auto& t : out.per_epsilon)
            if (t.fitted)
                out.stability_gap = std::max(out.stability_gap, std::abs(s.fit.slope - t.fit.slope));
    }
    if (smallest == nullptr)
        throw InsufficientData("no eps value has 3 radii with positive cylinder measure");
    out.d = smallest->fit.slope;
    return out;
}

ConditionalDimension conditional_dimension(const SystemModel& model, const TargetFamily& target,
                                           const std::vector<double>& eps_grid, const std::vector<double>& l_grid,
                                           std::uint64_t n, const RngStream& rng, int workers,
                                           std::vector<CylinderEstimate>* estimates)
{
    if (eps_grid.empty() || l_grid.size() < 3)
        throw InvalidArgument("conditional_dimension needs at least one eps and at least 3 radii");
    std::vector<CylinderEstimate> est = cylinder_grid(model, target, eps_grid, l_grid, n, rng, workers);
    ConditionalDimension cd = conditional_dimension_from(est);
    if (estimates != nullptr)
        *estimates = std::move(est);
    return cd;
}

} // namespace loglaw::estimators
