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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "loglaw/core/system_model.hpp"
#include "loglaw/hyperbolic/translate_cache.hpp"

namespace loglaw {

enum class TargetKind { base_ball, sasaki_ball, sublevel };

std::string to_string(TargetKind kind);

/*!
 * A 1-Lipschitz level function f with sublevel targets B_l = {f < l}.
 *
 * Ball kinds measure the distance to `center`: on tori the flat distance of
 * the base coordinates, on hyperbolic quotients the quotient distance of base
 * points (base_ball) or the Sasaki surrogate of frames (sasaki_ball). The
 * hyperbolic levels are exact below level_cap() and saturate there.
 */
class TargetFamily {
public:
    using LevelFn = std::function<double(const PhasePoint&)>;

    static TargetFamily base_ball(const SystemModel& model, const PhasePoint& center, double cache_radius = 1.0);
    static TargetFamily sasaki_ball(const SystemModel& model, const hyperbolic::UnitTangent& center,
                                    double cache_radius = 1.0);
    static TargetFamily sublevel(std::string label, LevelFn level, double lipschitz_constant, PhasePoint reference);
    /// Sublevel family of the circle distance between coordinate `axis` and `value`.
    static TargetFamily coordinate_strip(const SystemModel& model, int axis, double value);

    TargetKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }
    const PhasePoint& center() const noexcept { return center_; }
    double lipschitz_constant() const noexcept { return lipschitz_; }
    double level(const PhasePoint& x) const { return level_(x); }
    /// Level values at or above this cap only certify f >= cap.
    double level_cap() const noexcept { return cap_; }

    const hyperbolic::TranslateCache* cache() const noexcept { return cache_.get(); }
    const std::vector<hyperbolic::MobiusTransform>& sasaki_frames() const noexcept { return frames_; }

private:
    TargetFamily() = default;

    TargetKind kind_ = TargetKind::sublevel;
    std::string label_;
    PhasePoint center_;
    double lipschitz_ = 1.0;
    double cap_ = 0.0;
    LevelFn level_;
    std::shared_ptr<const hyperbolic::TranslateCache> cache_;
    std::vector<hyperbolic::MobiusTransform> frames_;
};

} // namespace loglaw
