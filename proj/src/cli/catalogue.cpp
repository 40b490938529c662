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

#include "loglaw/cli/catalogue.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/linear_flow.hpp"
#include "loglaw/systems/rotation.hpp"
#include "loglaw/systems/suspension.hpp"
#include "loglaw/systems/torus_maps.hpp"

namespace loglaw::cli {

using hyperbolic::Complex;

namespace {

struct ExponentRow {
    const char* system;
    const char* target;
    double exponent;
};

constexpr ExponentRow kExponents[] = {
    {"bolza", "base-ball", 1.0},
    {"bolza", "sasaki-ball", 2.0},
    {"cat", "base-ball", 2.0},
    {"cat", "strip", 1.0},
    {"doubling", "base-ball", 1.0},
    {"linear-flow", "base-ball", 1.0},
    {"linear-flow-golden", "base-ball", 1.0},
    {"linear-flow-liouville", "base-ball", 1.0},
    {"modular", "base-ball", 1.0},
    {"modular", "sasaki-ball", 2.0},
    {"rotation", "base-ball", 1.0},
    {"rotation-golden", "base-ball", 1.0},
    {"rotation-liouville", "base-ball", 1.0},
    {"suspension-cat", "base-ball", 2.0},
    {"suspension-doubling", "base-ball", 1.0},
};

double param(const SystemConfig& cfg, const std::string& path, const std::string& key, std::optional<double> dflt)
{
    const auto it = cfg.parameters.find(key);
    if (it != cfg.parameters.end())
        return it->second;
    if (!dflt)
        throw ConfigError(path + ".parameters." + key, "required parameter missing");
    return *dflt;
}

void only_parameters(const SystemConfig& cfg, const std::string& path, const std::set<std::string>& allowed)
{
    for (const auto& [key, value] : cfg.parameters)
        if (!allowed.count(key))
            throw ConfigError(path + ".parameters." + key, "unknown parameter for system '" + cfg.name + "'");
}

std::vector<double> center_or(const TargetConfig& cfg, std::size_t dim, double dflt)
{
    if (cfg.center.empty())
        return std::vector<double>(dim, dflt);
    return cfg.center;
}

constexpr double kDefaultCoordinate = 0.3;

} // namespace

std::vector<CatalogueEntry> catalogue()
{
    std::vector<CatalogueEntry> out = {
        {"bolza", "system", "", "geodesic flow on the genus-2 Bolza surface (compact, curvature -1, area 4 pi)", "none"},
        {"bolza/base-ball", "target", "1", "logarithm law for base balls: hitting exponent n-1", "center [x, y] in the octagon, default i"},
        {"bolza/cylinder-dimension", "experiment", "1", "cylinder volume mu(C) ~ K eps l^(n-1), K = 1/(2 pi) at n = 2", "epsilons, target radii"},
        {"bolza/excursion", "experiment", "1", "excursion law: -log d_t / log t -> 1/(n-1)", "t_grid, ensemble"},
        {"bolza/sasaki-ball", "target", "2", "logarithm law for Sasaki balls: hitting exponent 2n-2", "center [x, y, theta], default (i, 0)"},
        {"cat", "system", "", "Arnold cat map [[2,1],[1,1]] on the 2-torus (exact 64-bit fixed point)", "none"},
        {"cat/base-ball", "target", "2", "logarithm law for an exponentially mixing map: exponent = dimension", "center [x, y]"},
        {"cat/correlation", "experiment", "exponential", "exponential decay of correlations for Lipschitz observables", "observable, t_grid, samples"},
        {"cat/strip", "target", "1", "exponent = conditional dimension of a coordinate strip", "axis, center [value]"},
        {"doubling", "system", "", "doubling map x -> 2x mod 1 with lazily drawn random binary tail", "none"},
        {"doubling/base-ball", "target", "1", "logarithm law for an expanding map: exponent = dimension", "center [x]"},
        {"doubling/cylinder-dimension", "experiment", "1", "conditional dimension from cylinder measures", "epsilons (integers), target radii"},
        {"linear-flow", "system", "", "straight-line flow on the 2-torus with unit speed", "slope (required)"},
        {"linear-flow-golden", "system", "", "linear flow with golden-mean slope (bounded type)", "none"},
        {"linear-flow-golden/base-ball", "target", "1", "bounded-type slope: exponent = conditional dimension", "center [x, y]"},
        {"linear-flow-liouville", "system", "", "linear flow with Liouville slope [0;1,4,27,256,...]", "none"},
        {"linear-flow-liouville/base-ball", "target", ">1 along subsequences", "Liouville slope: the logarithm law fails", "center [x, y]"},
        {"modular", "system", "", "geodesic flow on the modular surface PSL(2,Z)\\H (finite area pi/3, one cusp)", "none"},
        {"modular/base-ball", "target", "1", "heuristic logarithm law for base balls off the cusp (non-compact)", "center [x, y], default 2i"},
        {"modular/cusp-excursion", "experiment", "1", "cusp excursion law: limsup max distance / log t = 1/k, k = 1", "t_grid, step, ensemble"},
        {"rotation", "system", "", "circle rotation by alpha (exact 64-bit fixed point)", "alpha (required)"},
        {"rotation-golden", "system", "", "circle rotation by the golden mean (bounded type)", "none"},
        {"rotation-golden/base-ball", "target", "1", "bounded-type rotation: exponent = dimension", "center [x]"},
        {"rotation-golden/correlation", "experiment", "none", "rotations do not mix: no decay of correlations", "observable, t_grid, samples"},
        {"rotation-liouville", "system", "", "circle rotation by a Liouville number, truncated past q = 1e12", "q_limit (default 1e12)"},
        {"rotation-liouville/base-ball", "target", ">1 along subsequences", "Liouville rotation: the logarithm law fails", "center [x]"},
        {"suspension-cat", "system", "", "suspension of the cat map under roof c0 + c1 cos(2 pi x)", "c0 (default 1), c1 (default 0.5)"},
        {"suspension-cat/section-check", "experiment", "2", "section reduction: tau = sum of roofs; flow and section exponents agree", "target radii, ensemble"},
        {"suspension-doubling", "system", "", "suspension of the doubling map under roof c0 + c1 cos(2 pi x)", "c0 (default 1), c1 (default 0.5)"},
        {"suspension-doubling/section-check", "experiment", "1", "section reduction: tau = sum of roofs; flow and section exponents agree", "target radii, ensemble"},
    };
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

std::string format_catalogue(const std::vector<CatalogueEntry>& entries)
{
    std::string s = "name\tkind\texpected\tlaw\tparameters\n";
    for (const auto& e : entries)
        s += e.name + "\t" + e.kind + "\t" + (e.expected.empty() ? "-" : e.expected) + "\t" + e.law + "\t" +
             e.parameters + "\n";
    return s;
}

SystemModel make_system(const SystemConfig& cfg, const std::string& path)
{
    const std::string& n = cfg.name;
    try {
        if (n == "cat" || n == "doubling" || n == "bolza" || n == "modular" || n == "rotation-golden" ||
            n == "linear-flow-golden" || n == "linear-flow-liouville") {
            only_parameters(cfg, path, {});
            if (n == "cat")
                return SystemModel::cat_map();
            if (n == "doubling")
                return SystemModel::doubling_map();
            if (n == "bolza")
                return SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
            if (n == "modular")
                return SystemModel::geodesic(hyperbolic::DomainVariant::modular);
            if (n == "rotation-golden")
                return SystemModel::rotation(systems::RotationSpec::golden());
            if (n == "linear-flow-golden")
                return SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
            return SystemModel::linear_flow(systems::LinearTorusFlowSpec::liouville());
        }
        if (n == "rotation-liouville") {
            only_parameters(cfg, path, {"q_limit"});
            return SystemModel::rotation(systems::RotationSpec::liouville(param(cfg, path, "q_limit", 1e12)));
        }
        if (n == "rotation") {
            only_parameters(cfg, path, {"alpha"});
            return SystemModel::rotation(systems::RotationSpec::custom(param(cfg, path, "alpha", std::nullopt)));
        }
        if (n == "linear-flow") {
            only_parameters(cfg, path, {"slope"});
            return SystemModel::linear_flow(
                systems::LinearTorusFlowSpec::with_slope(param(cfg, path, "slope", std::nullopt)));
        }
        if (n == "suspension-cat" || n == "suspension-doubling") {
            only_parameters(cfg, path, {"c0", "c1"});
            const systems::TorusMapSpec base{n == "suspension-cat" ? systems::TorusMapVariant::cat
                                                                   : systems::TorusMapVariant::doubling};
            return SystemModel::suspension(
                systems::SuspensionSpec::make(base, param(cfg, path, "c0", 1.0), param(cfg, path, "c1", 0.5)));
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(path + ".parameters", e.what());
    }
    throw ConfigError(path + ".name", "unknown system '" + n + "'");
}

TargetFamily make_target(const SystemModel& model, const TargetConfig& cfg, double min_cache_radius,
                         const std::string& path)
{
    const auto* dom = model.domain();
    const double cache_radius = cfg.cache_radius.value_or(std::max(1.0, min_cache_radius));
    try {
        if (cfg.kind == "strip") {
            const auto c = center_or(cfg, 1, kDefaultCoordinate);
            if (c.size() != 1)
                throw ConfigError(path + ".center", "a strip center is one coordinate value");
            return TargetFamily::coordinate_strip(model, cfg.axis, c[0]);
        }
        if (cfg.kind == "sasaki-ball") {
            if (!dom)
                throw ConfigError(path + ".kind", "sasaki-ball targets need a hyperbolic system");
            const auto c = center_or(cfg, 0, 0.0);
            Complex z = dom->variant() == hyperbolic::DomainVariant::bolza ? dom->center() : dom->reference_point();
            double theta = 0.0;
            if (!c.empty()) {
                if (c.size() != 3)
                    throw ConfigError(path + ".center", "a Sasaki center is [x, y, theta]");
                z = Complex(c[0], c[1]);
                theta = c[2];
            }
            return TargetFamily::sasaki_ball(model, hyperbolic::UnitTangent::from_point(z, theta), cache_radius);
        }
        if (cfg.kind != "base-ball")
            throw ConfigError(path + ".kind", "unknown target kind '" + cfg.kind + "'");

        if (dom) {
            Complex z = dom->variant() == hyperbolic::DomainVariant::bolza ? dom->center() : dom->reference_point();
            if (!cfg.center.empty()) {
                if (cfg.center.size() != 2)
                    throw ConfigError(path + ".center", "a hyperbolic base-ball center is [x, y]");
                z = Complex(cfg.center[0], cfg.center[1]);
            }
            return TargetFamily::base_ball(model, hyperbolic::UnitTangent::from_point(z, 0.0), cache_radius);
        }
        const auto& spec = model.spec();
        if (const auto* t = std::get_if<systems::TorusMapSpec>(&spec)) {
            if (t->variant == systems::TorusMapVariant::cat) {
                const auto c = center_or(cfg, 2, kDefaultCoordinate);
                if (c.size() != 2)
                    throw ConfigError(path + ".center", "a cat-map center is [x, y]");
                return TargetFamily::base_ball(model, systems::TorusPoint::from_doubles(c[0], c[1]));
            }
            const auto c = center_or(cfg, 1, kDefaultCoordinate);
            if (c.size() != 1)
                throw ConfigError(path + ".center", "a doubling-map center is [x]");
            return TargetFamily::base_ball(model, systems::DyadicPoint::from_double(c[0]));
        }
        if (std::holds_alternative<systems::RotationSpec>(spec)) {
            const auto c = center_or(cfg, 1, kDefaultCoordinate);
            if (c.size() != 1)
                throw ConfigError(path + ".center", "a rotation center is [x]");
            return TargetFamily::base_ball(model, systems::CirclePoint::from_double(c[0]));
        }
        if (std::holds_alternative<systems::LinearTorusFlowSpec>(spec)) {
            const auto c = center_or(cfg, 2, kDefaultCoordinate);
            if (c.size() != 2)
                throw ConfigError(path + ".center", "a linear-flow center is [x, y]");
            return TargetFamily::base_ball(model, systems::PlanarTorusPoint{c[0], c[1]});
        }
        const auto& s = std::get<systems::SuspensionSpec>(spec);
        if (s.base.variant == systems::TorusMapVariant::cat) {
            const auto c = center_or(cfg, 2, kDefaultCoordinate);
            if (c.size() != 2)
                throw ConfigError(path + ".center", "a suspension-cat center is [x, y] on the base");
            return TargetFamily::base_ball(model, systems::SuspensionPoint{systems::TorusPoint::from_doubles(c[0], c[1]), 0.0});
        }
        const auto c = center_or(cfg, 1, kDefaultCoordinate);
        if (c.size() != 1)
            throw ConfigError(path + ".center", "a suspension-doubling center is [x] on the base");
        return TargetFamily::base_ball(model, systems::SuspensionPoint{systems::DyadicPoint::from_double(c[0]), 0.0});
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(path + ".center", e.what());
    }
}

std::optional<double> expected_exponent(const std::string& system, const std::string& target_kind)
{
    for (const auto& row : kExponents)
        if (system == row.system && target_kind == row.target)
            return row.exponent;
    return std::nullopt;
}

} // namespace loglaw::cli
