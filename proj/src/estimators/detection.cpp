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

#include "loglaw/estimators/detection.hpp"

#include <cmath>

#include "loglaw/core/error.hpp"
#include "loglaw/core/scan.hpp"
#include "loglaw/hyperbolic/ball_scan.hpp"

namespace loglaw::estimators {

namespace {

constexpr double kMaxHyperbolicJump = 1.0;

std::vector<std::optional<double>> suspension_entries(const systems::SuspensionSpec& spec, const TargetFamily& target,
                                                      const systems::SuspensionPoint& x0,
                                                      const std::vector<double>& radii, double horizon)
{
    check_radii(radii);
    std::vector<std::optional<double>> out(radii.size());
    std::size_t next = 0;
    systems::BasePoint base = x0.base;
    double t = spec.roof(base) - x0.height;
    while (next < radii.size() && t <= horizon) {
        base = systems::base_step(spec.base, base);
        const double f = target.level(systems::SuspensionPoint{base, 0.0});
        while (next < radii.size() && f < radii[next])
            out[next++] = t;
        t += spec.roof(base);
    }
    return out;
}

std::vector<std::optional<double>> map_entries(const SystemModel& model, const TargetFamily& target,
                                               const PhasePoint& x0, const std::vector<double>& radii, double horizon)
{
    auto level = [&](const auto& p) { return target.level(PhasePoint(p)); };
    const double n_max = std::floor(horizon);
    if (const auto* rot = std::get_if<systems::RotationSpec>(&model.spec())) {
        return map_scan(std::get<systems::CirclePoint>(x0), level,
                        [rot](systems::CirclePoint p) { return systems::map_step(*rot, p); }, radii, n_max);
    }
    const auto& spec = std::get<systems::TorusMapSpec>(model.spec());
    if (spec.variant == systems::TorusMapVariant::cat)
        return map_scan(std::get<systems::TorusPoint>(x0), level,
                        [&spec](const systems::TorusPoint& p) { return systems::map_step(spec, p); }, radii, n_max);
    return map_scan(std::get<systems::DyadicPoint>(x0), level,
                    [&spec](const systems::DyadicPoint& p) { return systems::map_step(spec, p); }, radii, n_max);
}

} // namespace

std::vector<std::optional<double>> lipschitz_entries(const SystemModel& model, const TargetFamily& target,
                                                     const PhasePoint& x0, const std::vector<double>& radii,
                                                     double horizon, double window_fraction)
{
    if (model.kind() != SystemKind::flow)
        throw InvalidArgument("the Lipschitz scanner applies to flows only");
    check_radii(radii);
    if (!radii.empty() && !(radii.front() < target.level_cap()))
        throw InvalidArgument("target radius exceeds the exact range of the level function");
    ScanOptions opt;
    opt.lipschitz = target.lipschitz_constant() * model.velocity_bound();
    opt.level_cap = target.level_cap();
    opt.window_fraction = window_fraction;
    auto level = [&](const PhasePoint& p) { return target.level(p); };

    if (const hyperbolic::FuchsianDomain* dom = model.domain()) {
        auto step = [dom](const hyperbolic::MobiusTransform& g, double dt) {
            hyperbolic::MobiusTransform h = g;
            while (dt > 0.0) {
                const double piece = std::min(dt, kMaxHyperbolicJump);
                h = dom->reduce_frame(h * hyperbolic::axial_translation(piece));
                dt -= piece;
            }
            return h;
        };
        auto frame_level = [&](const hyperbolic::MobiusTransform& g) {
            return target.level(PhasePoint(hyperbolic::UnitTangent(g)));
        };
        return lipschitz_scan(dom->reduce_frame(std::get<hyperbolic::UnitTangent>(x0).group_element()), frame_level,
                              step, radii, horizon, opt);
    }
    auto step = [&](const PhasePoint& p, double dt) { return advance(model, p, dt); };
    return lipschitz_scan(x0, level, step, radii, horizon, opt);
}

std::vector<std::optional<double>> first_entries(const SystemModel& model, const TargetFamily& target,
                                                 const PhasePoint& x0, const std::vector<double>& radii,
                                                 double horizon)
{
    if (!(horizon >= 0.0))
        throw InvalidArgument("detection horizon must be non-negative");
    check_radii(radii);
    if (model.kind() == SystemKind::map)
        return map_entries(model, target, x0, radii, horizon);
    if (target.kind() == TargetKind::base_ball) {
        if (const hyperbolic::FuchsianDomain* dom = model.domain())
            return hyperbolic::ball_entry_scan(*dom, std::get<hyperbolic::UnitTangent>(x0), *target.cache(), radii,
                                               horizon);
        if (const auto* s = std::get_if<systems::SuspensionSpec>(&model.spec()))
            return suspension_entries(*s, target, std::get<systems::SuspensionPoint>(x0), radii, horizon);
    }
    return lipschitz_entries(model, target, x0, radii, horizon);
}

std::optional<double> sampled_entry(const SystemModel& model, const TargetFamily& target, const PhasePoint& x0,
                                    double r, double horizon, double step)
{
    if (!(step > 0.0))
        throw InvalidArgument("sampled_entry: step must be positive");
    PhasePoint x = x0;
    for (long i = 0;; ++i) {
        const double t = static_cast<double>(i) * step;
        if (t > horizon)
            return std::nullopt;
        if (target.level(x) < r)
            return t;
        x = advance(model, x, step);
    }
}

} // namespace loglaw::estimators
