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

#include "loglaw/systems/linear_flow.hpp"

#include <cmath>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw::systems {

LinearTorusFlowSpec LinearTorusFlowSpec::with_slope(double slope, ArithmeticClass c)
{
    if (!std::isfinite(slope))
        throw InvalidArgument("linear flow slope must be finite");
    const double norm = std::sqrt(1.0 + slope * slope);
    return {slope, c, 1.0 / norm, slope / norm};
}

LinearTorusFlowSpec LinearTorusFlowSpec::golden()
{
    return with_slope(RotationSpec::golden().alpha, ArithmeticClass::golden);
}

LinearTorusFlowSpec LinearTorusFlowSpec::liouville()
{
    return with_slope(RotationSpec::liouville().alpha, ArithmeticClass::liouville);
}

PlanarTorusPoint linear_flow_advance(const LinearTorusFlowSpec& spec, const PlanarTorusPoint& p, double t) noexcept
{
    return {wrap_unit(p.x + t * spec.vx), wrap_unit(p.y + t * spec.vy)};
}

double torus_distance(const PlanarTorusPoint& p, const PlanarTorusPoint& q) noexcept
{
    return std::hypot(circle_distance(p.x, q.x), circle_distance(p.y, q.y));
}

} // namespace loglaw::systems
