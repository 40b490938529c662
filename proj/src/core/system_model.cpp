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

#include "loglaw/core/system_model.hpp"

#include <cmath>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kHyperbolicChunk = 1.0;

std::string rotation_name(const systems::RotationSpec& spec)
{
    if (spec.arithmetic_class == systems::ArithmeticClass::custom)
        return "rotation";
    return "rotation-" + systems::to_string(spec.arithmetic_class);
}

std::string flow_name(const systems::LinearTorusFlowSpec& spec)
{
    if (spec.arithmetic_class == systems::ArithmeticClass::custom)
        return "linear-flow";
    return "linear-flow-" + systems::to_string(spec.arithmetic_class);
}

std::uint64_t map_steps(double dt)
{
    if (dt != std::floor(dt) || dt > 9.0e18)
        throw InvalidArgument("map systems advance by whole numbers of steps");
    return static_cast<std::uint64_t>(dt);
}

} // namespace

SystemModel::SystemModel(std::string name, SystemKind kind, int dimension, double velocity_bound, SystemSpec spec)
    : name_(std::move(name)), kind_(kind), dimension_(dimension), velocity_bound_(velocity_bound), spec_(std::move(spec))
{
}

SystemModel SystemModel::cat_map()
{
    return SystemModel("cat", SystemKind::map, 2, systems::cat_lipschitz(),
                       systems::TorusMapSpec{systems::TorusMapVariant::cat});
}

SystemModel SystemModel::doubling_map()
{
    return SystemModel("doubling", SystemKind::map, 1, 2.0, systems::TorusMapSpec{systems::TorusMapVariant::doubling});
}

SystemModel SystemModel::rotation(const systems::RotationSpec& spec)
{
    SystemModel m(rotation_name(spec), SystemKind::map, 1, 1.0, spec);
    m.parameters_.emplace_back("alpha", spec.alpha);
    return m;
}

SystemModel SystemModel::linear_flow(const systems::LinearTorusFlowSpec& spec)
{
    SystemModel m(flow_name(spec), SystemKind::flow, 2, 1.0, spec);
    m.parameters_.emplace_back("slope", spec.slope);
    return m;
}

SystemModel SystemModel::suspension(const systems::SuspensionSpec& spec)
{
    const bool cat = spec.base.variant == systems::TorusMapVariant::cat;
    SystemModel m(cat ? "suspension-cat" : "suspension-doubling", SystemKind::flow, cat ? 3 : 2, 1.0, spec);
    m.parameters_.emplace_back("c0", spec.c0);
    m.parameters_.emplace_back("c1", spec.c1);
    return m;
}

SystemModel SystemModel::geodesic(hyperbolic::DomainVariant variant)
{
    auto dom = std::make_shared<const hyperbolic::FuchsianDomain>(
        variant == hyperbolic::DomainVariant::bolza ? hyperbolic::FuchsianDomain::bolza()
                                                    : hyperbolic::FuchsianDomain::modular());
    const std::string name = dom->name();
    return SystemModel(name, SystemKind::flow, 3, 1.0, GeodesicSpec{std::move(dom)});
}

const hyperbolic::FuchsianDomain* SystemModel::domain() const noexcept
{
    if (const auto* g = std::get_if<GeodesicSpec>(&spec_))
        return g->domain.get();
    return nullptr;
}

PhasePoint advance(const SystemModel& model, const PhasePoint& x, double dt)
{
    if (!std::isfinite(dt) || dt < 0.0)
        throw InvalidArgument("advance: dt must be finite and non-negative");
    if (!coords_valid(x))
        throw NumericDomainError("advance received an invalid state for " + model.name());
    if (dt == 0.0)
        return x;

    PhasePoint out = std::visit(
        Overloaded{
            [&](const systems::TorusMapSpec& s) -> PhasePoint {
                const std::uint64_t n = map_steps(dt);
                if (s.variant == systems::TorusMapVariant::cat)
                    return systems::cat_power(std::get<systems::TorusPoint>(x), n);
                systems::DyadicPoint p = std::get<systems::DyadicPoint>(x);
                for (std::uint64_t i = 0; i < n; ++i)
                    p = systems::map_step(s, p);
                return p;
            },
            [&](const systems::RotationSpec& s) -> PhasePoint {
                return systems::rotation_power(s, std::get<systems::CirclePoint>(x), map_steps(dt));
            },
            [&](const systems::LinearTorusFlowSpec& s) -> PhasePoint {
                return systems::linear_flow_advance(s, std::get<systems::PlanarTorusPoint>(x), dt);
            },
            [&](const systems::SuspensionSpec& s) -> PhasePoint {
                return systems::suspension_advance(s, std::get<systems::SuspensionPoint>(x), dt).state;
            },
            [&](const GeodesicSpec& s) -> PhasePoint {
                hyperbolic::MobiusTransform g = std::get<hyperbolic::UnitTangent>(x).group_element();
                double left = dt;
                while (left > 0.0) {
                    const double step = std::min(left, kHyperbolicChunk);
                    g = s.domain->reduce_frame(g * hyperbolic::axial_translation(step));
                    left -= step;
                }
                return hyperbolic::UnitTangent(g);
            }},
        model.spec());
    if (!coords_valid(out))
        throw NumericDomainError("advance produced an invalid state for " + model.name());
    return out;
}

PhasePoint sample_point(const SystemModel& model, RngStream& rng, long attempt_cap)
{
    return std::visit(
        Overloaded{
            [&](const systems::TorusMapSpec& s) -> PhasePoint {
                if (s.variant == systems::TorusMapVariant::cat) {
                    const std::uint64_t x = rng.next_u64();
                    return systems::TorusPoint{x, rng.next_u64()};
                }
                const std::uint64_t x = rng.next_u64();
                return systems::DyadicPoint::with_random_tail(x, rng.split(rng.next_u64()));
            },
            [&](const systems::RotationSpec&) -> PhasePoint { return systems::CirclePoint{rng.next_u64()}; },
            [&](const systems::LinearTorusFlowSpec&) -> PhasePoint {
                const double x = rng.uniform();
                return systems::PlanarTorusPoint{x, rng.uniform()};
            },
            [&](const systems::SuspensionSpec& s) -> PhasePoint {
                for (long attempt = 1; attempt <= attempt_cap; ++attempt) {
                    systems::BasePoint base;
                    if (s.base.variant == systems::TorusMapVariant::cat) {
                        const std::uint64_t x = rng.next_u64();
                        base = systems::TorusPoint{x, rng.next_u64()};
                    } else {
                        const std::uint64_t x = rng.next_u64();
                        base = systems::DyadicPoint::with_random_tail(x, rng.split(rng.next_u64()));
                    }
                    const double roof = s.roof(base);
                    if (rng.uniform() * s.roof_max() < roof)
                        return systems::SuspensionPoint{base, rng.uniform() * roof};
                }
                throw SamplingFailure("suspension sampler exceeded its attempt cap", 0.0, attempt_cap);
            },
            [&](const GeodesicSpec& s) -> PhasePoint { return s.domain->liouville_sample(rng, attempt_cap); }},
        model.spec());
}

std::vector<PhasePoint> sample_invariant(const SystemModel& model, RngStream& rng, std::size_t n, long attempt_cap)
{
    if (n < 1)
        throw InvalidArgument("sample_invariant: n must be at least 1");
    std::vector<PhasePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(sample_point(model, rng, attempt_cap));
    return out;
}

} // namespace loglaw
