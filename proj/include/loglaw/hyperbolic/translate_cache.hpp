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

#include <vector>

#include "loglaw/hyperbolic/fuchsian.hpp"

namespace loglaw::hyperbolic {

/*!
 * Orbit points gamma(p) of a center p that can lie within r_max of the
 * fundamental domain.
 *
 * For z in the domain closure, the quotient distance from z to p equals the
 * minimum over the cache whenever that minimum is below r_max, so
 * truncated_distance() is exact below r_max and saturates at r_max above it.
 */
class TranslateCache {
public:
    TranslateCache(const FuchsianDomain& dom, Complex p, double r_max);

    Complex center() const noexcept { return center_; }
    double r_max() const noexcept { return r_max_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<MobiusTransform>& elements() const noexcept { return elements_; }
    const std::vector<Complex>& points() const noexcept { return points_; }

    /// min(r_max, min over cached gamma of d(z, gamma p)).
    double truncated_distance(Complex z) const noexcept;

    /// Translates gamma * frame for a frame based at the center.
    std::vector<MobiusTransform> translate_frames(const MobiusTransform& frame) const;

private:
    Complex center_;
    double r_max_;
    std::vector<MobiusTransform> elements_;
    std::vector<Complex> points_;
};

/// min(cap, min over frames of sasaki_distance(g, frame)).
double truncated_sasaki_distance(const MobiusTransform& g, const std::vector<MobiusTransform>& frames, double cap) noexcept;

} // namespace loglaw::hyperbolic
