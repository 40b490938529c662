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

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "loglaw/core/phase_point.hpp"
#include "loglaw/core/rng.hpp"
#include "loglaw/hyperbolic/fuchsian.hpp"

namespace loglaw {

enum class SystemKind { map, flow };

/// Geodesic flow on the unit tangent bundle of a quotient surface.
struct GeodesicSpec {
    std::shared_ptr<const hyperbolic::FuchsianDomain> domain;
};

using SystemSpec = std::variant<systems::TorusMapSpec, systems::RotationSpec, systems::LinearTorusFlowSpec,
                                systems::SuspensionSpec, GeodesicSpec>;

/*!
 * A named measure-preserving map or flow.
 *
 * velocity_bound is the sup speed of a flow, or the Lipschitz constant of one
 * step of a map, in the natural metric of the phase space.
 */
class SystemModel {
public:
    static SystemModel cat_map();
    static SystemModel doubling_map();
    static SystemModel rotation(const systems::RotationSpec& spec);
    static SystemModel linear_flow(const systems::LinearTorusFlowSpec& spec);
    static SystemModel suspension(const systems::SuspensionSpec& spec);
    static SystemModel geodesic(hyperbolic::DomainVariant variant);

    const std::string& name() const noexcept { return name_; }
    SystemKind kind() const noexcept { return kind_; }
    int dimension() const noexcept { return dimension_; }
    double velocity_bound() const noexcept { return velocity_bound_; }
    const std::vector<std::pair<std::string, double>>& parameters() const noexcept { return parameters_; }
    const SystemSpec& spec() const noexcept { return spec_; }

    /// Domain of a geodesic system, or nullptr.
    const hyperbolic::FuchsianDomain* domain() const noexcept;

private:
    SystemModel(std::string name, SystemKind kind, int dimension, double velocity_bound, SystemSpec spec);

    std::string name_;
    SystemKind kind_;
    int dimension_;
    double velocity_bound_;
    std::vector<std::pair<std::string, double>> parameters_;
    SystemSpec spec_;
};

/// Phi^dt(x). Maps require integral dt. Hyperbolic states come back reduced.
PhasePoint advance(const SystemModel& model, const PhasePoint& x, double dt);

/// One draw from the invariant measure.
PhasePoint sample_point(const SystemModel& model, RngStream& rng, long attempt_cap = 1000000);

/// n i.i.d. draws from the invariant measure, consumed sequentially from rng.
std::vector<PhasePoint> sample_invariant(const SystemModel& model, RngStream& rng, std::size_t n,
                                         long attempt_cap = 1000000);

} // namespace loglaw
