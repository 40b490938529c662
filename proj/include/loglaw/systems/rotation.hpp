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

#include <cstdint>
#include <string>
#include <vector>

namespace loglaw::systems {

/// Point of the circle in 64-bit fixed point.
struct CirclePoint {
    std::uint64_t x = 0;

    static CirclePoint from_double(double x) noexcept;
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

enum class ArithmeticClass { golden, liouville, custom };

std::string to_string(ArithmeticClass c);

/// Convergent p/q of a continued fraction.
struct Convergent {
    std::int64_t p;
    std::int64_t q;
};

/// Convergents of [0; a_1, a_2, ...]. Stops before q would exceed q_limit.
std::vector<Convergent> convergents(const std::vector<std::int64_t>& partial_quotients, std::int64_t q_limit);

/// First `depth` partial quotients of x in (0, 1), computed in double precision.
std::vector<std::int64_t> partial_quotients(double x, int depth);

/*!
 * Circle rotation x -> x + alpha mod 1 with alpha stored exactly in 64-bit
 * fixed point.
 *
 * golden: alpha = (sqrt 5 - 1) / 2 rounded down to 64 bits.
 * liouville: alpha = [0; 1, 2^2, 3^3, ...] truncated at the first convergent
 * whose denominator exceeds q_limit, then converted from the exact rational p/q.
 */
struct RotationSpec {
    ArithmeticClass arithmetic_class = ArithmeticClass::custom;
    std::uint64_t alpha_fixed = 0;
    double alpha = 0.0;
    std::vector<std::int64_t> partial_quotients;
    std::vector<std::int64_t> denominators;

    static RotationSpec golden();
    static RotationSpec liouville(double q_limit = 1e12);
    static RotationSpec custom(double alpha);
};

CirclePoint map_step(const RotationSpec& spec, CirclePoint p) noexcept;

/// n steps at once: x + n alpha mod 1, exact.
CirclePoint rotation_power(const RotationSpec& spec, CirclePoint p, std::uint64_t n) noexcept;

} // namespace loglaw::systems
