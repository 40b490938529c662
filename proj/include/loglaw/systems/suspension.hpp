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

#include "loglaw/systems/torus_maps.hpp"

namespace loglaw::systems {

/// Base point of a suspension: cat-map or doubling-map state.
using BasePoint = std::variant<TorusPoint, DyadicPoint>;

/// First base coordinate as a double in [0, 1).
double base_x(const BasePoint& p) noexcept;

/*!
 * Suspension flow over a torus map with roof c0 + c1 cos(2 pi x).
 *
 * The flow moves up the fiber at unit speed; on reaching the roof the base
 * map is applied and the height restarts at zero. The invariant measure is
 * base Lebesgue times fiber length, normalized by the mean roof c0.
 */
struct SuspensionSpec {
    TorusMapSpec base;
    double c0 = 1.0;
    double c1 = 0.0;

    static SuspensionSpec make(TorusMapSpec base, double c0, double c1);
    double roof(double x) const noexcept;
    double roof(const BasePoint& p) const noexcept { return roof(base_x(p)); }
    double roof_min() const noexcept;
    double roof_max() const noexcept;
    /// Integral of the roof against base Lebesgue measure.
    double mean_roof() const noexcept { return c0; }
};

struct SuspensionPoint {
    BasePoint base;
    double height = 0.0;
};

struct SuspensionStep {
    SuspensionPoint state;
    long crossings = 0;
};

BasePoint base_step(const TorusMapSpec& spec, const BasePoint& p) noexcept;

/// Flow for time dt >= 0, resolving each roof crossing exactly.
SuspensionStep suspension_advance(const SuspensionSpec& spec, const SuspensionPoint& state, double dt);

} // namespace loglaw::systems
