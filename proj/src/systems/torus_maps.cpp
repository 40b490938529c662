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

#include "loglaw/systems/torus_maps.hpp"

#include <cmath>

#include "loglaw/systems/fixed_point.hpp"

namespace loglaw::systems {

namespace {

struct Mat2 {
    std::uint64_t a, b, c, d;
};

Mat2 multiply(const Mat2& x, const Mat2& y) noexcept
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

} // namespace

TorusPoint TorusPoint::from_doubles(double x, double y) noexcept
{
    return {to_fixed(x), to_fixed(y)};
}

DyadicPoint DyadicPoint::from_double(double x) noexcept
{
    DyadicPoint p;
    p.x = to_fixed(x);
    return p;
}

DyadicPoint DyadicPoint::with_random_tail(std::uint64_t x, RngStream tail) noexcept
{
    DyadicPoint p;
    p.x = x;
    p.random_tail = true;
    p.tail = tail;
    return p;
}

unsigned DyadicPoint::next_digit() noexcept
{
    if (!random_tail)
        return 0;
    if (buffered == 0) {
        buffer = tail.next_u64();
        buffered = 64;
    }
    const unsigned bit = static_cast<unsigned>(buffer >> 63);
    buffer <<= 1;
    --buffered;
    return bit;
}

TorusPoint map_step(const TorusMapSpec&, const TorusPoint& p) noexcept
{
    return {2 * p.x + p.y, p.x + p.y};
}

DyadicPoint map_step(const TorusMapSpec&, const DyadicPoint& p) noexcept
{
    DyadicPoint q = p;
    q.x = (p.x << 1) | q.next_digit();
    return q;
}

TorusPoint cat_power(const TorusPoint& p, std::uint64_t n) noexcept
{
    Mat2 result{1, 0, 0, 1};
    Mat2 base{2, 1, 1, 1};
    while (n != 0) {
        if (n & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        n >>= 1;
    }
    return {result.a * p.x + result.b * p.y, result.c * p.x + result.d * p.y};
}

double cat_lipschitz() noexcept
{
    return 0.5 * (3.0 + std::sqrt(5.0));
}

} // namespace loglaw::systems
