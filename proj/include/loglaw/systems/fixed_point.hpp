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

#include <cmath>
#include <cstdint>

namespace loglaw::systems {

/// Point of R/Z in 64-bit fixed point: the value is x / 2^64.
inline std::uint64_t to_fixed(double x) noexcept
{
    double f = x - std::floor(x);
    if (!(f < 1.0) || !(f >= 0.0))
        f = 0.0;
    return static_cast<std::uint64_t>(std::ldexp(f, 64));
}

/// Nearest-below double in [0, 1).
inline double from_fixed(std::uint64_t x) noexcept
{
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Distance on R/Z between two fixed-point values, computed exactly then rounded.
inline double circle_distance_fixed(std::uint64_t x, std::uint64_t y) noexcept
{
    const std::uint64_t d = x - y;
    const std::uint64_t m = d < (0ull - d) ? d : (0ull - d);
    return std::ldexp(static_cast<double>(m), -64);
}

/// Distance on R/Z for doubles.
inline double circle_distance(double x, double y) noexcept
{
    double d = std::abs(x - y);
    d -= std::floor(d);
    return d > 0.5 ? 1.0 - d : d;
}

/// Reduce to [0, 1).
inline double wrap_unit(double x) noexcept
{
    double f = x - std::floor(x);
    return f < 1.0 ? f : 0.0;
}

} // namespace loglaw::systems
