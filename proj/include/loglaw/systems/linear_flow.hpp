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

#include "loglaw/systems/rotation.hpp"

namespace loglaw::systems {

/// Point of the 2-torus in floating point, coordinates in [0, 1).
struct PlanarTorusPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Straight-line flow on T^2 with unit-speed velocity (1, slope) / sqrt(1 + slope^2).
struct LinearTorusFlowSpec {
    double slope = 0.0;
    ArithmeticClass arithmetic_class = ArithmeticClass::custom;
    double vx = 1.0;
    double vy = 0.0;

    static LinearTorusFlowSpec with_slope(double slope, ArithmeticClass c = ArithmeticClass::custom);
    static LinearTorusFlowSpec golden();
    static LinearTorusFlowSpec liouville();
};

/// Closed-form flow x + t v mod 1; t may be negative.
PlanarTorusPoint linear_flow_advance(const LinearTorusFlowSpec& spec, const PlanarTorusPoint& p, double t) noexcept;

/// Euclidean distance on R^2 / Z^2.
double torus_distance(const PlanarTorusPoint& p, const PlanarTorusPoint& q) noexcept;

} // namespace loglaw::systems
