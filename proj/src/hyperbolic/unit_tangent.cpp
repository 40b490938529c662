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

#include "loglaw/hyperbolic/unit_tangent.hpp"

#include <cmath>
#include <numbers>

#include "loglaw/core/error.hpp"

namespace loglaw::hyperbolic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_0_2pi(double a) noexcept
{
    a = std::fmod(a, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    return a >= kTwoPi ? 0.0 : a;
}

double wrap_signed(double a) noexcept
{
    a = std::remainder(a, kTwoPi);
    return a;
}

} // namespace

double direction_angle(const MobiusTransform& g) noexcept
{
    // derivative at i is (ci + d)^{-2}; the upward vector i has angle pi/2
    return wrap_0_2pi(0.5 * std::numbers::pi - 2.0 * std::atan2(g.c, g.d));
}

UnitTangent::UnitTangent(const MobiusTransform& g) : g_(g.normalized())
{
    z_ = g_.apply(Complex(0.0, 1.0));
    theta_ = direction_angle(g_);
    if (!std::isfinite(z_.real()) || !std::isfinite(z_.imag()) || !(z_.imag() > 0.0))
        throw NumericDomainError("unit tangent base point left the upper half plane");
}

UnitTangent UnitTangent::from_point(Complex z, double theta)
{
    if (!(z.imag() > 0.0))
        throw InvalidArgument("UnitTangent::from_point: Im z must be positive");
    const double s = std::sqrt(z.imag());
    const MobiusTransform to_z{s, z.real() / s, 0.0, 1.0 / s};
    return UnitTangent(to_z * rotation_about_i(theta - 0.5 * std::numbers::pi));
}

bool UnitTangent::projection_consistent(double tol) const
{
    const Complex z = g_.apply(Complex(0.0, 1.0));
    const double dtheta = std::abs(wrap_signed(direction_angle(g_) - theta_));
    return std::abs(z - z_) <= tol * std::max(1.0, std::abs(z_)) && dtheta <= tol;
}

UnitTangent geodesic_advance(const UnitTangent& u, double t)
{
    if (!std::isfinite(t))
        throw InvalidArgument("geodesic_advance: non-finite time");
    return UnitTangent(u.group_element() * axial_translation(t));
}

double sasaki_distance(const MobiusTransform& gu, const MobiusTransform& gv) noexcept
{
    const MobiusTransform k = gu.inverse() * gv;
    // sinh^2(d/2) = (|k|_F^2 - 2) / 4 for k in SL(2, R)
    const double frob = k.a * k.a + k.b * k.b + k.c * k.c + k.d * k.d;
    const double base = distance_from_sinh2_half(0.25 * (frob - 2.0));
    // orthogonal polar factor is [[cos b, -sin b], [sin b, cos b]] with b below;
    // rotation_about_i(phi) has that form with b = -phi / 2
    const double beta = std::atan2(k.c - k.b, k.a + k.d);
    const double angle = std::abs(wrap_signed(-2.0 * beta));
    return std::sqrt(base * base + angle * angle);
}

double sasaki_distance(const UnitTangent& u, const UnitTangent& v) noexcept
{
    return sasaki_distance(u.group_element(), v.group_element());
}

double PerpendicularFoot::distance() const noexcept
{
    return distance_from_sinh2_half(0.5 * cosh_minus_one);
}

PerpendicularFoot perpendicular_foot(const MobiusTransform& g, Complex w) noexcept
{
    const Complex local = g.inverse().apply(w);
    const double radius = std::abs(local);
    const double y = local.imag();
    const double x = local.real();
    return {std::log(radius), radius / y, x * x / (y * (radius + y))};
}

double geodesic_ball_entry(const MobiusTransform& g, Complex w, double r) noexcept
{
    const PerpendicularFoot foot = perpendicular_foot(g, w);
    const double sh = std::sinh(0.5 * r);
    const double excess = 2.0 * sh * sh - foot.cosh_minus_one;
    if (!(excess > 0.0))
        return -1.0;
    // cosh(half chord) - 1 = (cosh r - cosh d0) / cosh d0
    const double half_chord = distance_from_sinh2_half(0.5 * excess / foot.cosh_distance);
    const double enter = foot.time - half_chord;
    const double leave = foot.time + half_chord;
    if (leave < 0.0)
        return -1.0;
    return enter > 0.0 ? enter : 0.0;
}

} // namespace loglaw::hyperbolic
