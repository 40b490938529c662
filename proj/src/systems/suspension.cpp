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

#include "loglaw/systems/suspension.hpp"

#include <cmath>
#include <numbers>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw::systems {

double base_x(const BasePoint& p) noexcept
{
    return std::visit([](const auto& q) { return from_fixed(q.x); }, p);
}

SuspensionSpec SuspensionSpec::make(TorusMapSpec base, double c0, double c1)
{
    if (!std::isfinite(c0) || !std::isfinite(c1) || !(c0 - std::abs(c1) > 0.0))
        throw InvalidArgument("suspension roof must stay bounded away from zero");
    return {base, c0, c1};
}

double SuspensionSpec::roof(double x) const noexcept
{
    return c1 == 0.0 ? c0 : c0 + c1 * std::cos(2.0 * std::numbers::pi * x);
}

double SuspensionSpec::roof_min() const noexcept { return c0 - std::abs(c1); }
double SuspensionSpec::roof_max() const noexcept { return c0 + std::abs(c1); }

BasePoint base_step(const TorusMapSpec& spec, const BasePoint& p) noexcept
{
    return std::visit([&](const auto& q) -> BasePoint { return map_step(spec, q); }, p);
}

SuspensionStep suspension_advance(const SuspensionSpec& spec, const SuspensionPoint& state, double dt)
{
    if (!(dt >= 0.0) || !std::isfinite(dt))
        throw InvalidArgument("suspension_advance: dt must be finite and non-negative");
    SuspensionStep out{state, 0};
    double remaining = dt;
    for (;;) {
        const double to_roof = spec.roof(out.state.base) - out.state.height;
        if (remaining < to_roof) {
            out.state.height += remaining;
            return out;
        }
        remaining -= to_roof;
        out.state.base = base_step(spec.base, out.state.base);
        out.state.height = 0.0;
        ++out.crossings;
    }
}

} // namespace loglaw::systems
