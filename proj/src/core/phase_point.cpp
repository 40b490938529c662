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

#include "loglaw/core/phase_point.hpp"

#include <cmath>

#include "loglaw/systems/fixed_point.hpp"

namespace loglaw {

namespace {

struct CoordVisitor {
    std::vector<double> operator()(const systems::TorusPoint& p) const
    {
        return {systems::from_fixed(p.x), systems::from_fixed(p.y)};
    }
    std::vector<double> operator()(const systems::DyadicPoint& p) const { return {systems::from_fixed(p.x)}; }
    std::vector<double> operator()(const systems::CirclePoint& p) const { return {systems::from_fixed(p.x)}; }
    std::vector<double> operator()(const systems::PlanarTorusPoint& p) const { return {p.x, p.y}; }
    std::vector<double> operator()(const systems::SuspensionPoint& p) const
    {
        std::vector<double> out = std::visit(*this, PhasePoint(std::visit([](const auto& b) -> PhasePoint { return b; }, p.base)));
        out.push_back(p.height);
        return out;
    }
    std::vector<double> operator()(const hyperbolic::UnitTangent& u) const
    {
        return {u.base().real(), u.base().imag(), u.theta()};
    }
};

} // namespace

std::vector<double> coords(const PhasePoint& x)
{
    return std::visit(CoordVisitor{}, x);
}

bool coords_valid(const PhasePoint& x)
{
    if (const auto* f = std::get_if<systems::PlanarTorusPoint>(&x))
        return f->x >= 0.0 && f->x < 1.0 && f->y >= 0.0 && f->y < 1.0;
    if (const auto* s = std::get_if<systems::SuspensionPoint>(&x))
        return std::isfinite(s->height) && s->height >= 0.0;
    if (const auto* u = std::get_if<hyperbolic::UnitTangent>(&x)) {
        const hyperbolic::Complex z = u->base();
        return std::isfinite(z.real()) && std::isfinite(z.imag()) && z.imag() > 0.0 && std::isfinite(u->theta());
    }
    // fixed-point states are in [0, 1) by construction
    return true;
}

} // namespace loglaw
