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

#include "loglaw/estimators/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"
#include "loglaw/estimators/detection.hpp"

namespace loglaw::estimators {

namespace {

constexpr double kResolutionFloor = 1e-9;
constexpr double kMaxCensoredFraction = 0.10;

std::string format_radius(double l)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", l);
    return buf;
}

} // namespace

RadiusSchedule::RadiusSchedule(std::vector<double> l_values) : l_(std::move(l_values))
{
    if (l_.empty())
        throw InvalidArgument("radius schedule is empty");
    for (std::size_t i = 0; i < l_.size(); ++i) {
        if (!std::isfinite(l_[i]) || !(l_[i] > kResolutionFloor))
            throw InvalidArgument("radius schedule values must be finite and above 1e-9");
        if (i > 0 && !(l_[i] < l_[i - 1]))
            throw InvalidArgument("radius schedule must be strictly decreasing");
    }
}

RadiusSchedule RadiusSchedule::geometric(double l0, double ratio, int count)
{
    if (!(ratio > 0.0 && ratio < 1.0) || count < 1)
        throw InvalidArgument("geometric schedule needs ratio in (0, 1) and count >= 1");
    std::vector<double> l;
    double v = l0;
    for (int i = 0; i < count; ++i, v *= ratio)
        l.push_back(v);
    return RadiusSchedule(std::move(l));
}

double TMaxRule::operator()(double l, bool integral) const
{
    if (!(factor > 0.0) || !std::isfinite(d_expected))
        throw InvalidArgument("t_max rule needs a positive factor and finite exponent");
    const double t = factor * std::pow(l, -d_expected);
    if (!integral)
        return t;
    const double nearest = std::nearbyint(t);
    return std::abs(t - nearest) <= 1e-12 * t ? nearest : std::floor(t);
}

std::vector<HitRecord> hitting_times(const SystemModel& model, const PhasePoint& x0, const TargetFamily& target,
                                     const RadiusSchedule& schedule, const std::vector<double>& t_max,
                                     std::uint64_t trajectory_id)
{
    const auto& l = schedule.values();
    if (t_max.size() != l.size())
        throw InvalidArgument("one t_max per radius is required");
    double horizon = 0.0;
    for (double t : t_max) {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw InvalidArgument("t_max must be finite and non-negative");
        if (model.kind() == SystemKind::map && t != std::floor(t))
            throw InvalidArgument("map systems need integral t_max");
        horizon = std::max(horizon, t);
    }
    const auto entries = first_entries(model, target, x0, l, horizon);
    std::vector<HitRecord> out;
    out.reserve(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) {
        HitRecord rec{trajectory_id, l[j], t_max[j], true};
        if (entries[j] && *entries[j] <= t_max[j]) {
            rec.tau = *entries[j];
            rec.censored = false;
        }
        out.push_back(rec);
    }
    return out;
}

HitRecord hitting_time(const SystemModel& model, const PhasePoint& x0, const TargetFamily& target, double l,
                       double t_max)
{
    if (!(l > 0.0) || !std::isfinite(l))
        throw InvalidArgument("hitting_time: l must be positive");
    return hitting_times(model, x0, target, RadiusSchedule({l}), {t_max}).front();
}

PhasePoint trajectory_start(const SystemModel& model, std::uint64_t seed, std::uint64_t trajectory_id)
{
    RngStream rng = rng_stream(seed, trajectory_id);
    return sample_point(model, rng);
}

namespace {

std::vector<double> budgets(const SystemModel& model, const RadiusSchedule& schedule, const TMaxRule& rule)
{
    std::vector<double> t_max;
    for (double l : schedule.values())
        t_max.push_back(rule(l, model.kind() == SystemKind::map));
    return t_max;
}

template <class Kernel>
std::vector<HitRecord> run_ensemble(Kernel&& kernel, const SystemModel& model, const TargetFamily& target,
                                    const RadiusSchedule& schedule, const TMaxRule& rule, std::uint64_t seed,
                                    std::uint64_t first, std::uint64_t count)
{
    const std::vector<double> t_max = budgets(model, schedule, rule);
    auto one = [&](std::size_t i) {
        const std::uint64_t id = first + i;
        return hitting_times(model, trajectory_start(model, seed, id), target, schedule, t_max, id);
    };
    std::vector<std::vector<HitRecord>> per = kernel(static_cast<std::size_t>(count), one);
    std::vector<HitRecord> out;
    out.reserve(count * schedule.size());
    for (auto& v : per)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace

std::vector<HitRecord> hitting_ensemble(const SystemModel& model, const TargetFamily& target,
                                        const RadiusSchedule& schedule, const TMaxRule& rule, std::uint64_t seed,
                                        std::uint64_t first, std::uint64_t count, int workers)
{
    return run_ensemble([workers](std::size_t n, auto& fn) { return parallel::map_indexed(n, workers, fn); }, model,
                        target, schedule, rule, seed, first, count);
}

std::vector<HitRecord> hitting_ensemble_serial(const SystemModel& model, const TargetFamily& target,
                                               const RadiusSchedule& schedule, const TMaxRule& rule,
                                               std::uint64_t seed, std::uint64_t first, std::uint64_t count)
{
    return run_ensemble([](std::size_t n, auto& fn) { return parallel::map_indexed_serial(n, fn); }, model, target,
                        schedule, rule, seed, first, count);
}

ExponentFit fit_hitting_exponent(const std::vector<HitRecord>& records, const RadiusSchedule& schedule)
{
    ExponentFit fit;
    std::vector<std::pair<double, double>> points;
    for (double l : schedule.values()) {
        RadiusSummary s;
        s.l = l;
        std::vector<double> logs;
        for (const HitRecord& r : records) {
            if (r.l != l)
                continue;
            ++s.samples;
            if (r.censored) {
                ++s.censored;
                logs.push_back(std::numeric_limits<double>::infinity());
            } else {
                logs.push_back(std::log(r.tau));
            }
        }
        if (s.samples == 0) {
            fit.warnings.push_back("radius " + format_radius(l) + " has no records");
            fit.radii.push_back(s);
            continue;
        }
        s.median_log_tau = median(logs);
        const double censored_fraction = static_cast<double>(s.censored) / static_cast<double>(s.samples);
        if (censored_fraction > kMaxCensoredFraction) {
            fit.warnings.push_back("radius " + format_radius(l) + " dropped: " + std::to_string(s.censored) + " of " +
                                   std::to_string(s.samples) + " records censored");
        } else if (!std::isfinite(s.median_log_tau)) {
            fit.warnings.push_back("radius " + format_radius(l) + " dropped: median log tau is not finite");
        } else {
            s.used = true;
            points.emplace_back(-std::log(l), s.median_log_tau);
        }
        fit.radii.push_back(s);
    }
    if (points.size() < 3)
        throw InsufficientData("fewer than 3 usable radii for the hitting exponent");
    const LineFit line = loglog_fit(points);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.stderr_slope = line.stderr_slope;
    fit.r_squared = line.r_squared;
    return fit;
}

ExponentFit hitting_exponent(const SystemModel& model, const TargetFamily& target, const RadiusSchedule& schedule,
                             std::uint64_t ensemble, const TMaxRule& rule, std::uint64_t seed, int workers)
{
    if (ensemble < 30)
        throw InvalidArgument("hitting_exponent needs an ensemble of at least 30");
    return fit_hitting_exponent(hitting_ensemble(model, target, schedule, rule, seed, 0, ensemble, workers), schedule);
}

std::vector<double> max_log_ratio(const std::vector<HitRecord>& records, const RadiusSchedule& schedule)
{
    std::vector<double> out;
    for (double l : schedule.values()) {
        double best = -std::numeric_limits<double>::infinity();
        for (const HitRecord& r : records)
            if (r.l == l && !r.censored && r.tau > 0.0)
                best = std::max(best, std::log(r.tau) / -std::log(l));
        out.push_back(best);
    }
    return out;
}

} // namespace loglaw::estimators
