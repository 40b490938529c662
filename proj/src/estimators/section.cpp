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

#include "loglaw/estimators/section.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"

namespace loglaw::estimators {

namespace {

// Neumaier compensated sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

double flow_step(const systems::SuspensionSpec& spec)
{
    double dt = 1.0;
    while (dt > 0.5 * spec.roof_min())
        dt *= 0.5;
    return dt;
}

systems::BasePoint section_start(const systems::SuspensionSpec& spec, std::uint64_t seed, std::uint64_t id)
{
    RngStream rng = rng_stream(seed, id);
    if (spec.base.variant == systems::TorusMapVariant::cat) {
        const std::uint64_t x = rng.next_u64();
        return systems::TorusPoint{x, rng.next_u64()};
    }
    const std::uint64_t x = rng.next_u64();
    return systems::DyadicPoint::with_random_tail(x, rng.split(rng.next_u64()));
}

std::vector<SectionRecord> one_trajectory(const systems::SuspensionSpec& spec, const TargetFamily& target,
                                          const RadiusSchedule& schedule, const std::vector<double>& n_max,
                                          std::uint64_t seed, std::uint64_t id)
{
    const auto& radii = schedule.values();
    const double dt = flow_step(spec);
    const double horizon = *std::max_element(n_max.begin(), n_max.end());

    std::vector<SectionRecord> out(radii.size());
    for (std::size_t j = 0; j < radii.size(); ++j) {
        out[j].trajectory_id = id;
        out[j].r = radii[j];
        out[j].censored = true;
    }

    const systems::BasePoint start = section_start(spec, seed, id);
    systems::SuspensionPoint flow{start, 0.0};
    systems::BasePoint section = start;
    CompensatedSum roof_sum;
    long steps = 0;
    long n = 0;
    std::size_t next = 0;
    while (next < radii.size() && static_cast<double>(n) < horizon) {
        const systems::SuspensionStep s = systems::suspension_advance(spec, flow, dt);
        ++steps;
        flow = s.state;
        if (s.crossings == 0)
            continue;
        if (s.crossings != 1)
            throw NumericDomainError("section check step crossed the roof twice");
        roof_sum.add(spec.roof(section));
        section = systems::base_step(spec.base, section);
        ++n;
        const double tau_flow = static_cast<double>(steps) * dt - flow.height;
        const double f = target.level(systems::SuspensionPoint{section, 0.0});
        while (next < radii.size() && f < radii[next]) {
            SectionRecord& rec = out[next];
            rec.tau_section = n;
            rec.tau_flow = tau_flow;
            rec.sum_roof = roof_sum.value();
            rec.residual = tau_flow - rec.sum_roof;
            rec.censored = static_cast<double>(n) > n_max[next];
            ++next;
        }
    }
    for (std::size_t j = next; j < radii.size(); ++j) {
        out[j].tau_section = static_cast<long>(n_max[j]);
        out[j].tau_flow = static_cast<double>(steps) * dt - flow.height;
        out[j].sum_roof = roof_sum.value();
        out[j].residual = out[j].tau_flow - out[j].sum_roof;
    }
    return out;
}

} // namespace

std::vector<SectionRecord> section_trajectories(const systems::SuspensionSpec& spec, const TargetFamily& target,
                                                const RadiusSchedule& schedule, const TMaxRule& rule,
                                                std::uint64_t seed, std::uint64_t first, std::uint64_t count,
                                                int workers)
{
    if (target.kind() != TargetKind::base_ball)
        throw InvalidArgument("section checks use base-ball targets on the section");
    std::vector<double> n_max;
    for (double r : schedule.values())
        n_max.push_back(rule(r, true));
    auto per = parallel::map_indexed(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
        return one_trajectory(spec, target, schedule, n_max, seed, first + i);
    });
    std::vector<SectionRecord> out;
    for (auto& v : per)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

SectionReport section_report(const systems::SuspensionSpec& spec, const std::vector<SectionRecord>& records,
                             const RadiusSchedule& schedule, std::uint64_t seed)
{
    SectionReport rep;
    rep.records = records;
    rep.mean_return_quadrature = spec.mean_roof();

    std::vector<std::uint64_t> ids;
    for (const auto& r : records)
        if (ids.empty() || ids.back() != r.trajectory_id)
            ids.push_back(r.trajectory_id);
    double s = 0.0, s2 = 0.0;
    for (std::uint64_t id : ids) {
        const double roof = spec.roof(section_start(spec, seed, id));
        s += roof;
        s2 += roof * roof;
    }
    if (!ids.empty()) {
        const double n = static_cast<double>(ids.size());
        rep.mean_return = s / n;
        rep.mean_return_stderr = std::sqrt(std::max(0.0, s2 / n - rep.mean_return * rep.mean_return) / n);
    }

    std::vector<HitRecord> flow, section;
    for (const auto& r : records) {
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(r.residual));
        flow.push_back({r.trajectory_id, r.r, r.tau_flow, r.censored});
        section.push_back({r.trajectory_id, r.r, static_cast<double>(r.tau_section), r.censored});
    }
    rep.flow_fit = fit_hitting_exponent(flow, schedule);
    rep.section_fit = fit_hitting_exponent(section, schedule);
    for (double l : schedule.values()) {
        std::vector<double> ratios;
        for (const auto& r : records)
            if (r.r == l && !r.censored)
                ratios.push_back(r.tau_flow / (static_cast<double>(r.tau_section) * rep.mean_return_quadrature));
        rep.median_ratio.push_back(ratios.empty() ? std::numeric_limits<double>::quiet_NaN() : median(ratios));
    }
    return rep;
}

SectionReport section_check(const systems::SuspensionSpec& spec, const TargetFamily& target,
                            const RadiusSchedule& schedule, std::uint64_t ensemble, const TMaxRule& rule,
                            std::uint64_t seed, int workers)
{
    return section_report(spec, section_trajectories(spec, target, schedule, rule, seed, 0, ensemble, workers),
                          schedule, seed);
}

} // namespace loglaw::estimators
