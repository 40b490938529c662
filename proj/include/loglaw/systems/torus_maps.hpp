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

#include "loglaw/core/rng.hpp"

namespace loglaw::systems {

/// Point of the 2-torus in 64-bit fixed point per coordinate.
struct TorusPoint {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static TorusPoint from_doubles(double x, double y) noexcept;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

/*!
 * Point of the circle under the doubling map.
 *
 * The 64 bits of `x` are the visible binary digits. Doubling shifts in the
 * next digit of an infinite tail drawn lazily from `tail`, so a point sampled
 * from Lebesgue measure keeps behaving like a real number forever. A point
 * built from a double has an all-zero tail.
 */
struct DyadicPoint {
    std::uint64_t x = 0;
    std::uint64_t buffer = 0;
    int buffered = 0;
    bool random_tail = false;
    RngStream tail;

    static DyadicPoint from_double(double x) noexcept;
    static DyadicPoint with_random_tail(std::uint64_t x, RngStream tail) noexcept;
    /// Next digit shifted in by the doubling map.
    unsigned next_digit() noexcept;
};

enum class TorusMapVariant { cat, doubling };

/// The cat map [[2, 1], [1, 1]] on T^2, or x -> 2x on the circle.
struct TorusMapSpec {
    TorusMapVariant variant = TorusMapVariant::cat;
};

/// One exact step of the cat map.
TorusPoint map_step(const TorusMapSpec& spec, const TorusPoint& p) noexcept;
/// One exact step of the doubling map.
DyadicPoint map_step(const TorusMapSpec& spec, const DyadicPoint& p) noexcept;

/// The cat map applied n times, via the n-th power of the matrix mod 2^64.
TorusPoint cat_power(const TorusPoint& p, std::uint64_t n) noexcept;

/// Operator norm of the cat matrix; the Lipschitz constant of one step.
double cat_lipschitz() noexcept;

} // namespace loglaw::systems
