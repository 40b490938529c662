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

#include "loglaw/hyperbolic/mobius.hpp"

namespace loglaw::hyperbolic {

/*!
 * Point of the unit tangent bundle of H^2, stored as a group element g.
 *
 * The base point is g(i) and the direction is the image under g of the upward
 * unit vector at i. The projection (z, theta) is cached at construction;
 * theta is the Euclidean angle of the tangent vector, in [0, 2 pi).
 */
class UnitTangent {
public:
    UnitTangent() : UnitTangent(MobiusTransform::identity()) {}
    explicit UnitTangent(const MobiusTransform& g);

    /// Frame with base point z and direction angle theta.
    static UnitTangent from_point(Complex z, double theta);

    const MobiusTransform& group_element() const noexcept { return g_; }
    Complex base() const noexcept { return z_; }
    double theta() const noexcept { return theta_; }

    /// Recomputes (z, theta) from the group element and compares with the cache.
    bool projection_consistent(double tol = 1e-9) const;

private:
    MobiusTransform g_;
    Complex z_;
    double theta_;
};

/// Direction angle of g applied to the upward vector at i, in [0, 2 pi).
double direction_angle(const MobiusTransform& g) noexcept;

/// Geodesic flow: g -> g * diag(e^{t/2}, e^{-t/2}). Unit speed in the base.
UnitTangent geodesic_advance(const UnitTangent& u, double t);

/*!
 * Distance on T^1 H^2 used as the Sasaki surrogate:
 * sqrt(d(x, y)^2 + angle^2), where angle is the difference between v's
 * direction and u's direction parallel-transported along the geodesic x -> y.
 *
 * With k = g_u^{-1} g_v = P O (polar decomposition), P is the transvection
 * carrying u's frame to y and O the residual rotation, so the angle is the
 * turn produced by O.
 */
double sasaki_distance(const UnitTangent& u, const UnitTangent& v) noexcept;

/// Same quantity for frames given as group elements.
double sasaki_distance(const MobiusTransform& gu, const MobiusTransform& gv) noexcept;

/*!
 * Closest approach of the geodesic through frame g to the point w.
 *
 * In the frame of g the geodesic is t -> i e^t and
 *   cosh d(t) = cosh(d0) cosh(t - t0),  t0 = log|w'|,  cosh d0 = |w'| / Im w',
 * with w' = g^{-1}(w).
 */
struct PerpendicularFoot {
    double time;          ///< t0, flow time of the closest point (may be negative)
    double cosh_distance; ///< cosh d0
    double cosh_minus_one; ///< cosh d0 - 1, computed without cancellation
    double distance() const noexcept;
};

PerpendicularFoot perpendicular_foot(const MobiusTransform& g, Complex w) noexcept;

/// First t >= 0 with d(base(g a_t), w) < r along the full geodesic, or a negative value if never.
double geodesic_ball_entry(const MobiusTransform& g, Complex w, double r) noexcept;

} // namespace loglaw::hyperbolic
