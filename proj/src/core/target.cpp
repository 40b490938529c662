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

#include "loglaw/core/target.hpp"

#include <cmath>
#include <limits>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw {

namespace {

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

double base_distance(const systems::BasePoint& a, const systems::BasePoint& b)
{
    if (const auto* p = std::get_if<systems::TorusPoint>(&a)) {
        const auto& q = std::get<systems::TorusPoint>(b);
        return std::hypot(systems::circle_distance_fixed(p->x, q.x), systems::circle_distance_fixed(p->y, q.y));
    }
    return systems::circle_distance_fixed(std::get<systems::DyadicPoint>(a).x, std::get<systems::DyadicPoint>(b).x);
}

} // namespace

std::string to_string(TargetKind kind)
{
    switch (kind) {
    case TargetKind::base_ball:
        return "base-ball";
    case TargetKind::sasaki_ball:
        return "sasaki-ball";
    case TargetKind::sublevel:
        break;
    }
    return "sublevel";
}

TargetFamily TargetFamily::base_ball(const SystemModel& model, const PhasePoint& center, double cache_radius)
{
    TargetFamily t;
    t.kind_ = TargetKind::base_ball;
    t.label_ = "base-ball";
    t.center_ = center;
    t.cap_ = kUnbounded;
    try {
        if (const auto* c = std::get_if<systems::TorusPoint>(&center)) {
            const systems::TorusPoint cc = *c;
            t.level_ = [cc](const PhasePoint& x) {
                const auto& p = std::get<systems::TorusPoint>(x);
                return std::hypot(systems::circle_distance_fixed(p.x, cc.x), systems::circle_distance_fixed(p.y, cc.y));
            };
        } else if (const auto* d = std::get_if<systems::DyadicPoint>(&center)) {
            const std::uint64_t cx = d->x;
            t.level_ = [cx](const PhasePoint& x) {
                return systems::circle_distance_fixed(std::get<systems::DyadicPoint>(x).x, cx);
            };
        } else if (const auto* r = std::get_if<systems::CirclePoint>(&center)) {
            const std::uint64_t cx = r->x;
            t.level_ = [cx](const PhasePoint& x) {
                return systems::circle_distance_fixed(std::get<systems::CirclePoint>(x).x, cx);
            };
        } else if (const auto* f = std::get_if<systems::PlanarTorusPoint>(&center)) {
            const systems::PlanarTorusPoint cc = *f;
            t.level_ = [cc](const PhasePoint& x) {
                return systems::torus_distance(std::get<systems::PlanarTorusPoint>(x), cc);
            };
        } else if (const auto* s = std::get_if<systems::SuspensionPoint>(&center)) {
            const systems::BasePoint cb = s->base;
            t.level_ = [cb](const PhasePoint& x) { return base_distance(std::get<systems::SuspensionPoint>(x).base, cb); };
        } else {
            const auto& u = std::get<hyperbolic::UnitTangent>(center);
            const hyperbolic::FuchsianDomain* dom = model.domain();
            if (dom == nullptr)
                throw InvalidArgument("hyperbolic center given for a non-hyperbolic system");
            auto cache = std::make_shared<const hyperbolic::TranslateCache>(*dom, u.base(), cache_radius);
            t.cache_ = cache;
            t.cap_ = cache_radius;
            t.level_ = [cache](const PhasePoint& x) {
                return cache->truncated_distance(std::get<hyperbolic::UnitTangent>(x).base());
            };
        }
        // probe the level function once so a mismatched center fails here
        t.level_(center);
    } catch (const std::bad_variant_access&) {
        throw InvalidArgument("target center does not match the state space of " + model.name());
    }
    return t;
}

TargetFamily TargetFamily::sasaki_ball(const SystemModel& model, const hyperbolic::UnitTangent& center,
                                       double cache_radius)
{
    const hyperbolic::FuchsianDomain* dom = model.domain();
    if (dom == nullptr)
        throw InvalidArgument("sasaki-ball targets need a hyperbolic system");
    TargetFamily t;
    t.kind_ = TargetKind::sasaki_ball;
    t.label_ = "sasaki-ball";
    t.center_ = center;
    t.cap_ = cache_radius;
    t.cache_ = std::make_shared<const hyperbolic::TranslateCache>(*dom, center.base(), cache_radius);
    t.frames_ = t.cache_->translate_frames(center.group_element());
    auto frames = std::make_shared<const std::vector<hyperbolic::MobiusTransform>>(t.frames_);
    t.level_ = [frames, cache_radius](const PhasePoint& x) {
        return hyperbolic::truncated_sasaki_distance(std::get<hyperbolic::UnitTangent>(x).group_element(), *frames,
                                                     cache_radius);
    };
    return t;
}

TargetFamily TargetFamily::sublevel(std::string label, LevelFn level, double lipschitz_constant, PhasePoint reference)
{
    if (!(lipschitz_constant > 0.0) || !level)
        throw InvalidArgument("sublevel target needs a level function and a positive Lipschitz constant");
    TargetFamily t;
    t.kind_ = TargetKind::sublevel;
    t.label_ = std::move(label);
    t.center_ = std::move(reference);
    t.lipschitz_ = lipschitz_constant;
    t.cap_ = kUnbounded;
    t.level_ = std::move(level);
    return t;
}

TargetFamily TargetFamily::coordinate_strip(const SystemModel& model, int axis, double value)
{
    if (model.domain() != nullptr)
        throw InvalidArgument("coordinate strips are defined on toral systems only");
    if (axis < 0 || axis >= model.dimension())
        throw InvalidArgument("coordinate strip axis out of range for " + model.name());
    const std::size_t k = static_cast<std::size_t>(axis);
    LevelFn f = [k, value](const PhasePoint& x) { return systems::circle_distance(coords(x)[k], value); };
    RngStream probe(0, 0);
    return sublevel("strip", std::move(f), 1.0, sample_point(model, probe));
}

} // namespace loglaw
