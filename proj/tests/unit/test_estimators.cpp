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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loglaw/core/error.hpp"
#include "loglaw/core/system_model.hpp"
#include "loglaw/core/target.hpp"
#include "loglaw/estimators/correlation.hpp"
#include "loglaw/estimators/cylinder.hpp"
#include "loglaw/estimators/detection.hpp"
#include "loglaw/estimators/excursion.hpp"
#include "loglaw/estimators/fit.hpp"
#include "loglaw/estimators/hitting.hpp"
#include "loglaw/estimators/section.hpp"
#include "loglaw/systems/fixed_point.hpp"
#include "loglaw/systems/linear_flow.hpp"
#include "loglaw/systems/rotation.hpp"
#include "loglaw/systems/suspension.hpp"
#include "loglaw/systems/torus_maps.hpp"

using namespace loglaw;
using namespace loglaw::estimators;

namespace {

const PhasePoint kBolzaCenter = hyperbolic::UnitTangent::from_point({0.0, 1.0}, 0.0);

std::vector<HitRecord> synthetic_records(const std::vector<double>& radii, double exponent, int per_radius)
{
    std::vector<HitRecord> out;
    for (int i = 0; i < per_radius; ++i)
        for (double l : radii)
            out.push_back({static_cast<std::uint64_t>(i), l, std::pow(l, -exponent), false});
    return out;
}

} // namespace

TEST_CASE("loglog_fit recovers an exact line and rejects degenerate input")
{
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 6; ++i)
        pts.emplace_back(i, 3.0 - 1.5 * i);
    const auto fit = loglog_fit(pts);
    CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.stderr_slope < 1e-10);
    CHECK(fit.points == 6);
    CHECK_THROWS_AS(loglog_fit({{0, 1}, {1, 2}}), InsufficientData);
    CHECK_THROWS_AS(loglog_fit({{1, 1}, {1, 2}, {1, 3}}), InsufficientData);

    const auto weighted = loglog_fit({{0, 0}, {1, 1}, {2, 2}, {3, 10}}, {1, 1, 1, 1e-12});
    CHECK(weighted.slope == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("median handles even sizes and infinities")
{
    CHECK(median({3, 1, 2}) == 2.0);
    CHECK(median({4, 1, 2, 3}) == 2.5);
    CHECK(median({1, INFINITY, INFINITY}) == INFINITY);
    CHECK_THROWS(median({}));
}

TEST_CASE("radius schedules and budgets")
{
    CHECK_THROWS_AS(RadiusSchedule({0.1, 0.2}), InvalidArgument);
    CHECK_THROWS_AS(RadiusSchedule({0.1, 1e-10}), InvalidArgument);
    CHECK_THROWS_AS(RadiusSchedule({}), InvalidArgument);
    const auto g = RadiusSchedule::geometric(0.5, 0.5, 4);
    CHECK(g.values() == std::vector<double>{0.5, 0.25, 0.125, 0.0625});
    TMaxRule rule{100.0, 2.0};
    CHECK(rule(0.1, true) == doctest::Approx(10000.0));
    CHECK(rule(0.3, true) == std::floor(100.0 / 0.09));
}

TEST_CASE("synthetic tau = l^-2 gives slope 2 with r^2 = 1")
{
    const RadiusSchedule s({0.5, 0.25, 0.125, 0.0625});
    const auto fit = fit_hitting_exponent(synthetic_records(s.values(), 2.0, 31), s);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.warnings.empty());
}

TEST_CASE("heavily censored radii are dropped; too few radii is insufficient data")
{
    const RadiusSchedule s({0.5, 0.25, 0.125, 0.0625});
    auto recs = synthetic_records(s.values(), 1.0, 40);
    for (auto& r : recs)
        if (r.l == 0.0625 && r.trajectory_id < 5)
            r.censored = true;
    const auto fit = fit_hitting_exponent(recs, s);
    CHECK(fit.radii.back().used == false);
    CHECK(fit.radii.back().censored == 5);
    CHECK(fit.warnings.size() == 1);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-12));

    for (auto& r : recs)
        if (r.l == 0.125 && r.trajectory_id < 10)
            r.censored = true;
    CHECK_THROWS_AS(fit_hitting_exponent(recs, s), InsufficientData);
}

TEST_CASE("hitting_time examples")
{
    const auto rot = SystemModel::rotation(systems::RotationSpec::custom(0.25));
    const auto target = TargetFamily::base_ball(rot, systems::CirclePoint::from_double(0.5));
    const auto rec = hitting_time(rot, systems::CirclePoint::from_double(0.0), target, 0.1, 100);
    CHECK_FALSE(rec.censored);
    CHECK(rec.tau == 2.0);

    const auto inside = hitting_time(rot, systems::CirclePoint::from_double(0.52), target, 0.1, 100);
    CHECK(inside.tau == 0.0);

    const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto bt = TargetFamily::base_ball(bolza, kBolzaCenter, 1.0);
    CHECK(hitting_time(bolza, hyperbolic::UnitTangent::from_point({0.0, 1.01}, 2.0), bt, 0.1, 100).tau == 0.0);

    const auto never = hitting_time(rot, systems::CirclePoint::from_double(0.1), target, 0.01, 50);
    CHECK(never.censored);
    CHECK(never.tau == 50.0);
    CHECK_THROWS_AS(hitting_time(rot, systems::CirclePoint{}, target, 0.0, 10), InvalidArgument);
    CHECK_THROWS_AS(hitting_time(rot, systems::CirclePoint{}, target, 0.1, 10.5), InvalidArgument);
}

TEST_CASE("cat map hitting time equals exhaustive orbit enumeration")
{
    const auto cat = SystemModel::cat_map();
    const auto center = systems::TorusPoint::from_doubles(0.3, 0.7);
    const auto target = TargetFamily::base_ball(cat, center);
    const double r = std::ldexp(1.0, -6);
    for (std::uint64_t id = 0; id < 20; ++id) {
        const PhasePoint x0 = trajectory_start(cat, 77, id);
        auto p = std::get<systems::TorusPoint>(x0);
        double oracle = -1;
        for (int n = 0; n <= 100000; ++n) {
            const double dx = systems::circle_distance(systems::from_fixed(p.x), 0.3);
            const double dy = systems::circle_distance(systems::from_fixed(p.y), 0.7);
            if (std::hypot(dx, dy) < r) {
                oracle = n;
                break;
            }
            p = systems::map_step(systems::TorusMapSpec{systems::TorusMapVariant::cat}, p);
        }
        const auto rec = hitting_time(cat, x0, target, r, 100000);
        if (oracle < 0)
            CHECK(rec.censored);
        else
            CHECK(rec.tau == oracle);
    }
}

TEST_CASE("hit times are monotone in the radius along one orbit")
{
    const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto target = TargetFamily::base_ball(bolza, kBolzaCenter, 1.0);
    const RadiusSchedule s({0.4, 0.2, 0.1, 0.05});
    const auto recs = hitting_ensemble_serial(bolza, target, s, TMaxRule{}, 5, 0, 20);
    for (std::size_t i = 0; i + 1 < recs.size(); ++i)
        if (recs[i].trajectory_id == recs[i + 1].trajectory_id)
            CHECK(recs[i].tau <= recs[i + 1].tau);
}

TEST_CASE("Lipschitz scanner agrees with a 25x finer sampled oracle")
{
    SUBCASE("linear flow")
    {
        const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
        const auto target = TargetFamily::base_ball(flow, systems::PlanarTorusPoint{0.3, 0.6});
        const double r = 0.02;
        for (std::uint64_t id = 0; id < 30; ++id) {
            const PhasePoint x0 = trajectory_start(flow, 3, id);
            const auto fast = lipschitz_entries(flow, target, x0, {r}, 500.0).front();
            const auto fine = sampled_entry(flow, target, x0, r, 500.0, r / 4.0 / 25.0);
            if (fine) {
                REQUIRE(fast.has_value());
                CHECK(*fast <= *fine + r * 1e-3);
                CHECK(*fine - *fast <= r / 100.0 + r * 1e-3);
            }
        }
    }
    SUBCASE("Bolza Sasaki balls")
    {
        const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
        const auto target =
            TargetFamily::sasaki_ball(bolza, std::get<hyperbolic::UnitTangent>(kBolzaCenter), 1.0);
        const double r = 0.6;
        const double lip = target.lipschitz_constant() * bolza.velocity_bound();
        int compared = 0;
        for (std::uint64_t id = 0; id < 60; ++id) {
            const PhasePoint x0 = trajectory_start(bolza, 4, id);
            const auto fast = lipschitz_entries(bolza, target, x0, {r}, 20.0).front();
            const double step = r / (4.0 * lip) / 25.0;
            const auto fine = sampled_entry(bolza, target, x0, r, 20.0, step);
            compared += fine ? 1 : 0;
            if (fine) {
                REQUIRE(fast.has_value());
                CHECK(*fast <= *fine + r * 1e-3);
                CHECK(*fine - *fast <= step + r * 1e-3);
            }
        }
        CHECK(compared > 10);
    }
}

TEST_CASE("suspension hits happen at roof crossings")
{
    const auto spec = systems::SuspensionSpec::make({systems::TorusMapVariant::doubling}, 1.0, 0.0);
    const auto model = SystemModel::suspension(spec);
    const auto target =
        TargetFamily::base_ball(model, systems::SuspensionPoint{systems::DyadicPoint::from_double(0.6), 0.0});
    const auto rec = hitting_time(model, systems::SuspensionPoint{systems::DyadicPoint::from_double(0.3), 0.25},
                                  target, 0.01, 100.0);
    CHECK(rec.tau == doctest::Approx(0.75));
}

TEST_CASE("hitting ensembles: OpenMP kernel equals the serial reference")
{
    const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto target = TargetFamily::base_ball(bolza, kBolzaCenter, 1.0);
    const RadiusSchedule s({0.25, 0.125, 0.0625});
    const auto serial = hitting_ensemble_serial(bolza, target, s, TMaxRule{}, 9, 3, 40);
    for (int w : {1, 2, 4}) {
        const auto par = hitting_ensemble(bolza, target, s, TMaxRule{}, 9, 3, 40, w);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].trajectory_id == serial[i].trajectory_id);
            CHECK(par[i].tau == serial[i].tau);
            CHECK(par[i].censored == serial[i].censored);
        }
    }
    CHECK_THROWS_AS(hitting_exponent(bolza, target, s, 10, TMaxRule{}, 1, 1), InvalidArgument);
}

TEST_CASE("doubling map smoke ensemble has slope near 1")
{
    const auto dbl = SystemModel::doubling_map();
    const auto target = TargetFamily::base_ball(dbl, systems::DyadicPoint::from_double(0.3));
    const RadiusSchedule s({0.01, 0.001, 0.0001});
    const auto fit = hitting_exponent(dbl, target, s, 30, TMaxRule{}, 7, 1);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("max_log_ratio picks the largest uncensored ratio")
{
    const RadiusSchedule s({0.1, 0.01});
    std::vector<HitRecord> recs = {{0, 0.1, 10.0, false}, {1, 0.1, 1000.0, false}, {2, 0.1, 1e9, true},
                                   {0, 0.01, 0.0, false}};
    const auto m = max_log_ratio(recs, s);
    CHECK(m[0] == doctest::Approx(3.0));
    CHECK(m[1] == -INFINITY);
}

TEST_CASE("cylinder of the whole space has measure 1")
{
    const auto cat = SystemModel::cat_map();
    const auto target = TargetFamily::base_ball(cat, systems::TorusPoint::from_doubles(0.5, 0.5));
    const auto est = cylinder_measure(cat, target, 1.0, 1.0, 1000, rng_stream(1, 0));
    CHECK(est.mu_hat == 1.0);
    CHECK(est.stderr_mu == 0.0);
    CHECK_THROWS_AS(cylinder_measure(cat, target, 1.0, 0.1, 999, rng_stream(1, 0)), InvalidArgument);
    CHECK_THROWS_AS(cylinder_measure(cat, target, 0.5, 0.1, 1000, rng_stream(1, 0)), InvalidArgument);
}

TEST_CASE("linear-flow cylinders match grid quadrature and the strip area 2 l eps")
{
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::with_slope(1.0));
    const auto target = TargetFamily::base_ball(flow, systems::PlanarTorusPoint{0.5, 0.5});
    const double eps = 0.2, l = 0.05;
    const int m = 400;
    int inside = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            inside += cylinder_membership(flow, target, systems::PlanarTorusPoint{(i + 0.5) / m, (j + 0.5) / m},
                                          {eps}, {l})[0]
                          ? 1
                          : 0;
    const double quad = static_cast<double>(inside) / (m * m);
    CHECK(quad == doctest::Approx(2.0 * l * eps).epsilon(0.02));
    const auto est = cylinder_measure(flow, target, eps, l, 200000, rng_stream(2, 0), 1);
    CHECK(std::abs(est.mu_hat - quad) < 3.0 * est.stderr_mu + 1.0 / m);
}

TEST_CASE("Bolza cylinder volume follows eps sinh(l) / (2 pi)")
{
    const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto target = TargetFamily::base_ball(bolza, kBolzaCenter, 1.0);
    const auto est = cylinder_grid(bolza, target, {0.2, 0.4}, {0.4, 0.2}, 200000, rng_stream(3, 0), 1);
    for (const auto& e : est) {
        const double oracle = e.epsilon * std::sinh(e.l) / (2.0 * std::numbers::pi);
        CHECK(std::abs(e.mu_hat - oracle) < 4.0 * e.stderr_mu);
    }
    CHECK(est[2].mu_hat / est[0].mu_hat == doctest::Approx(2.0).epsilon(0.1));
    CHECK_THROWS_AS(cylinder_grid(bolza, target, {0.6}, {0.5}, 1000, rng_stream(3, 0), 1), InvalidArgument);
}

TEST_CASE("cylinder grid: OpenMP kernel equals the serial reference")
{
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
    const auto target = TargetFamily::base_ball(flow, systems::PlanarTorusPoint{0.3, 0.6});
    const auto serial = cylinder_grid_serial(flow, target, {0.1, 0.2}, {0.1, 0.05, 0.02}, 20000, rng_stream(4, 0));
    const auto par = cylinder_grid(flow, target, {0.1, 0.2}, {0.1, 0.05, 0.02}, 20000, rng_stream(4, 0), 3);
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < par.size(); ++i)
        CHECK(par[i].mu_hat == serial[i].mu_hat);
}

TEST_CASE("conditional dimension: synthetic eps l^2 and the cat map")
{
    std::vector<CylinderEstimate> synth;
    for (double eps : {0.1, 0.2, 0.4})
        for (double l : {0.1, 0.05, 0.025, 0.0125})
            synth.push_back({eps, l, eps * l * l, 1e-9, 1000000});
    const auto d = conditional_dimension_from(synth);
    for (const auto& s : d.per_epsilon)
        CHECK(s.fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.d == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.stability_gap < 1e-9);

    const auto cat = SystemModel::cat_map();
    const auto target = TargetFamily::base_ball(cat, systems::TorusPoint::from_doubles(0.3, 0.6));
    const auto cd = conditional_dimension(cat, target, {1.0}, {0.2, 0.1, 0.05, 0.025}, 400000, rng_stream(5, 0), 1);
    CHECK(cd.d == doctest::Approx(2.0).epsilon(0.05));

    std::vector<CylinderEstimate> empty;
    for (double l : {0.1, 0.05, 0.025})
        empty.push_back({1.0, l, 0.0, 0.0, 1000});
    CHECK_THROWS_AS(conditional_dimension_from(empty), InsufficientData);
}

TEST_CASE("correlation: constant g gives zero, C(0) is the variance")
{
    const auto cat = SystemModel::cat_map();
    const auto f = cone_observable({0.3, 0.6}, 0.3);
    const auto c = constant_observable(2.0);
    const auto zero = correlation_curve(cat, f, c, {0, 1, 2}, 20000, rng_stream(1, 0), 1);
    for (double v : zero.c)
        CHECK(std::abs(v) <= 3.0 * zero.noise_floor + 1e-15);

    const auto curve = correlation_curve(cat, f, f, {0, 1}, 200000, rng_stream(2, 0), 1);
    // Exact variance of the cone: integral of (0.3 - r)^2 over the disc minus the squared mean.
    const double h = 0.3;
    const double mean = std::numbers::pi * h * h * h / 3.0;
    const double second = std::numbers::pi * h * h * h * h / 6.0;
    CHECK(std::abs(curve.c[0] - (second - mean * mean)) < 3.0 * curve.stderr_c[0]);

    CHECK_THROWS_AS(correlation_curve(cat, c, f, {0, 1}, 20000, rng_stream(1, 0), 1), InvalidArgument);
    CHECK_THROWS_AS(correlation_curve(SystemModel::geodesic(hyperbolic::DomainVariant::bolza), f, f, {0, 1}, 20000,
                                      rng_stream(1, 0), 1),
                    InvalidArgument);
}

TEST_CASE("correlation: OpenMP kernel equals the serial reference")
{
    const auto rot = SystemModel::rotation(systems::RotationSpec::golden());
    const auto f = cosine_observable(0);
    const std::vector<double> grid = {0, 1, 2, 3};
    const auto a = correlation_curve_serial(rot, f, f, grid, 30000, rng_stream(7, 0));
    const auto b = correlation_curve(rot, f, f, grid, 30000, rng_stream(7, 0), 3);
    CHECK(a.c == b.c);
    CHECK(a.stderr_c == b.stderr_c);
}

TEST_CASE("decay classification on synthetic curves")
{
    auto make = [](std::vector<double> c) {
        CorrelationCurve k;
        for (std::size_t i = 0; i < c.size(); ++i)
            k.t.push_back(static_cast<double>(i));
        k.c = std::move(c);
        k.stderr_c.assign(k.c.size(), 1e-9);
        k.noise_floor = 1e-9;
        return k;
    };
    std::vector<double> expo, power, flat;
    for (int t = 0; t < 10; ++t) {
        expo.push_back(std::exp(-0.8 * t));
        power.push_back(std::pow(1.0 + t, -2.0));
        flat.push_back(0.1 * std::cos(1.3 * t) + 0.2);
    }
    auto e = make(expo);
    classify_decay(e);
    CHECK(e.classification == DecayClass::exponential);
    CHECK(e.rate == doctest::Approx(0.8).epsilon(1e-9));
    auto p = make(power);
    classify_decay(p);
    CHECK(p.classification == DecayClass::polynomial);
    CHECK(p.rate == doctest::Approx(2.0).epsilon(1e-9));
    auto n = make(flat);
    classify_decay(n);
    CHECK(n.classification == DecayClass::none);
    auto few = make({1.0, 0.1, 1e-12, 1e-13});
    classify_decay(few);
    CHECK(few.classification == DecayClass::inconclusive);
}

TEST_CASE("golden rotation correlations do not decay")
{
    const auto rot = SystemModel::rotation(systems::RotationSpec::golden());
    const auto f = cone_observable({0.3}, 0.3);
    std::vector<double> grid;
    for (int t = 0; t <= 40; ++t)
        grid.push_back(t);
    const auto c = correlation_curve(rot, f, f, grid, 200000, rng_stream(8, 0), 1);
    CHECK(c.classification == DecayClass::none);
}

TEST_CASE("section check: constant roof is exact")
{
    const auto spec = systems::SuspensionSpec::make({systems::TorusMapVariant::cat}, 1.0, 0.0);
    const auto model = SystemModel::suspension(spec);
    const auto target = TargetFamily::base_ball(
        model, systems::SuspensionPoint{systems::TorusPoint::from_doubles(0.3, 0.6), 0.0});
    const RadiusSchedule s({0.25, 0.125, 0.0625});
    const auto rep = section_check(spec, target, s, 40, TMaxRule{100.0, 2.0}, 3, 1);
    CHECK(rep.mean_return == 1.0);
    CHECK(rep.mean_return_quadrature == 1.0);
    for (const auto& r : rep.records) {
        CHECK(r.tau_flow == static_cast<double>(r.tau_section));
        CHECK(r.residual == 0.0);
    }
}

TEST_CASE("section check: variable roof identity and mean return")
{
    const auto spec = systems::SuspensionSpec::make({systems::TorusMapVariant::cat}, 1.0, 0.5);
    const auto model = SystemModel::suspension(spec);
    const auto target = TargetFamily::base_ball(
        model, systems::SuspensionPoint{systems::TorusPoint::from_doubles(0.3, 0.6), 0.0});
    const RadiusSchedule s({0.25, 0.125, 0.0625});
    const auto rep = section_check(spec, target, s, 200, TMaxRule{100.0, 2.0}, 4, 1);
    CHECK(rep.max_abs_residual < 1e-9);
    CHECK(std::abs(rep.mean_return - rep.mean_return_quadrature) < 3.0 * rep.mean_return_stderr);
    const auto par = section_trajectories(spec, target, s, TMaxRule{100.0, 2.0}, 4, 0, 200, 3);
    REQUIRE(par.size() == rep.records.size());
    for (std::size_t i = 0; i < par.size(); ++i)
        CHECK(par[i].tau_flow == rep.records[i].tau_flow);
    CHECK_THROWS_AS(section_check(spec, TargetFamily::coordinate_strip(model, 0, 0.3), s, 10, TMaxRule{}, 1, 1),
                    InvalidArgument);
}

TEST_CASE("excursion curves are monotone and the ensemble is worker independent")
{
    const auto bolza = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto target = TargetFamily::base_ball(bolza, kBolzaCenter, 1.0);
    const auto grid = geometric_grid(10.0, 1e4, 4);
    CHECK(grid.front() == 10.0);
    CHECK(grid.back() == 1e4);
    const auto a = excursion_ensemble(*bolza.domain(), *target.cache(), grid, 5, 0, 6, 1);
    const auto b = excursion_ensemble(*bolza.domain(), *target.cache(), grid, 5, 0, 6, 3);
    for (std::size_t i = 0; i < a.curves.size(); ++i) {
        CHECK(a.curves[i].d_t == b.curves[i].d_t);
        for (std::size_t k = 1; k < a.curves[i].d_t.size(); ++k)
            CHECK(a.curves[i].d_t[k] <= a.curves[i].d_t[k - 1]);
    }
    CHECK_THROWS_AS(excursion_curve(*bolza.domain(), std::get<hyperbolic::UnitTangent>(kBolzaCenter),
                                    *target.cache(), {10.0, 5.0}),
                    InvalidArgument);
}

TEST_CASE("cusp excursions: monotone, finite, modular only")
{
    const auto modular = hyperbolic::FuchsianDomain::modular();
    const auto curves = cusp_ensemble(modular, {10.0, 100.0, 1000.0}, 6, 0, 4, 1);
    for (const auto& c : curves)
        for (std::size_t k = 0; k < c.max_dist.size(); ++k) {
            CHECK(std::isfinite(c.max_dist[k]));
            if (k > 0)
                CHECK(c.max_dist[k] >= c.max_dist[k - 1]);
        }
    const auto bolza = hyperbolic::FuchsianDomain::bolza();
    auto rng = rng_stream(1, 1);
    CHECK_THROWS_AS(cusp_excursion(bolza, bolza.liouville_sample(rng), {10.0}), InvalidArgument);
}
