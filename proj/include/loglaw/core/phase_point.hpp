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

#pragma once

#include <variant>
#include <vector>

#include "loglaw/hyperbolic/unit_tangent.hpp"
#include "loglaw/systems/linear_flow.hpp"
#include "loglaw/systems/rotation.hpp"
#include "loglaw/systems/suspension.hpp"
#include "loglaw/systems/torus_maps.hpp"

namespace loglaw {

/// State of any catalogued system. Hyperbolic states are reduced frames.
using PhasePoint = std::variant<systems::TorusPoint, systems::DyadicPoint, systems::CirclePoint,
                                systems::PlanarTorusPoint, systems::SuspensionPoint, hyperbolic::UnitTangent>;

/*!
 * Real coordinates of a state.
 *
 * Toral coordinates lie in [0, 1). Suspension states append the fiber
 * height; unit tangents give (Re z, Im z, theta).
 */
std::vector<double> coords(const PhasePoint& x);

/// Every coordinate finite (and toral ones in [0, 1)).
bool coords_valid(const PhasePoint& x);

} // namespace loglaw
