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

#include <complex>

namespace loglaw::hyperbolic {

using Complex = std::complex<double>;

/*!
 * Element of PSL(2, R) acting on the upper half plane by z -> (az + b)/(cz + d).
 *
 * Matrices are kept at determinant one; M and -M act identically and are
 * treated as the same transform by projective_distance().
 */
struct MobiusTransform {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static MobiusTransform identity() noexcept { return {}; }

    Complex apply(Complex z) const noexcept { return (a * z + b) / (c * z + d); }
    double det() const noexcept { return a * d - b * c; }
    MobiusTransform inverse() const noexcept { return {d, -b, -c, a}; }
    /// Rescale to determinant one.
    MobiusTransform normalized() const;

    friend MobiusTransform operator*(const MobiusTransform& x, const MobiusTransform& y) noexcept
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

/// max-norm distance between x and the nearer of +y, -y.
double projective_distance(const MobiusTransform& x, const MobiusTransform& y) noexcept;

/// Elliptic element fixing i that turns tangent directions at i by +angle.
MobiusTransform rotation_about_i(double angle) noexcept;

/// Hyperbolic element translating the imaginary axis upward by `length`.
MobiusTransform axial_translation(double length) noexcept;

/// Translation z -> z + shift.
MobiusTransform horizontal_shift(double shift) noexcept;

/// cosh of the hyperbolic distance, 1 + |z - w|^2 / (2 Im z Im w). No argument checks.
inline double cosh_distance(Complex z, Complex w) noexcept
{
    return 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
}

/// sinh^2(d/2) = |z - w|^2 / (4 Im z Im w); monotone in d and exact near zero.
inline double sinh2_half_distance(Complex z, Complex w) noexcept
{
    return std::norm(z - w) / (4.0 * z.imag() * w.imag());
}

/// Inverse of sinh2_half_distance.
double distance_from_sinh2_half(double s) noexcept;

/// Hyperbolic distance in the upper half plane; throws InvalidArgument if Im <= 0.
double hyp_distance(Complex z, Complex w);

/// acosh clamped at 1 so round-off never produces NaN.
double safe_acosh(double x) noexcept;

} // namespace loglaw::hyperbolic
