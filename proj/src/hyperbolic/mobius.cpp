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

#include "loglaw/hyperbolic/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "loglaw/core/error.hpp"

namespace loglaw::hyperbolic {

MobiusTransform MobiusTransform::normalized() const
{
    const double det_value = det();
    if (!(det_value > 0.0) || !std::isfinite(det_value))
        throw NumericDomainError("Mobius transform lost its positive determinant");
    const double s = 1.0 / std::sqrt(det_value);
    return {a * s, b * s, c * s, d * s};
}

double projective_distance(const MobiusTransform& x, const MobiusTransform& y) noexcept
{
    const double plus = std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
    const double minus = std::max({std::abs(x.a + y.a), std::abs(x.b + y.b), std::abs(x.c + y.c), std::abs(x.d + y.d)});
    return std::min(plus, minus);
}

MobiusTransform rotation_about_i(double angle) noexcept
{
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    return {c, s, -s, c};
}

MobiusTransform axial_translation(double length) noexcept
{
    const double e = std::exp(0.5 * length);
    return {e, 0.0, 0.0, 1.0 / e};
}

MobiusTransform horizontal_shift(double shift) noexcept
{
    return {1.0, shift, 0.0, 1.0};
}

double hyp_distance(Complex z, Complex w)
{
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw InvalidArgument("hyp_distance: points must lie in the upper half plane");
    return distance_from_sinh2_half(sinh2_half_distance(z, w));
}

double distance_from_sinh2_half(double s) noexcept
{
    return s <= 0.0 ? 0.0 : 2.0 * std::asinh(std::sqrt(s));
}

double safe_acosh(double x) noexcept
{
    return x <= 1.0 ? 0.0 : std::acosh(x);
}

} // namespace loglaw::hyperbolic
