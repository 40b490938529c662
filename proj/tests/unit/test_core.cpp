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
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"
#include "loglaw/core/rng.hpp"
#include "loglaw/core/system_model.hpp"
#include "loglaw/core/target.hpp"
#include "loglaw/systems/linear_flow.hpp"
#include "loglaw/systems/rotation.hpp"
#include "loglaw/systems/suspension.hpp"
#include "loglaw/systems/torus_maps.hpp"

using namespace loglaw;

TEST_CASE("philox4x32-10 matches the published known-answer vectors")
{
    using A4 = std::array<std::uint32_t, 4>;
    using A2 = std::array<std::uint32_t, 2>;
    CHECK(philox4x32(A4{0, 0, 0, 0}, A2{0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32(A4{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, A2{0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32(A4{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, A2{0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("rng streams are deterministic and distinct")
{
    RngStream a = rng_stream(42, 0), b = rng_stream(42, 0), c = rng_stream(42, 1);
    int differ = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        differ += va != c.next_u64();
    }
    CHECK(differ == 1000);
    CHECK(a == b);
    CHECK(a.counter() == 1000);
}

TEST_CASE("rng output depends only on (seed, stream, counter)")
{
    RngStream a = rng_stream(7, 3);
    for (int i = 0; i < 17; ++i)
        a.next_u64();
    RngStream b(7, 3, 17);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u64() == b.next_u64());
    CHECK(rng_stream(7, 3).split(5).next_u64() == rng_stream(7, 3).split(5).next_u64());
    CHECK(rng_stream(7, 3).split(5).next_u64() != rng_stream(7, 3).split(6).next_u64());
}

TEST_CASE("streams 0 and 1 are uncorrelated")
{
    RngStream a = rng_stream(42, 0), b = rng_stream(42, 1);
    const int n = 100000;
    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < n; ++i) {
        const double x = a.uniform(), y = b.uniform();
        sa += x;
        sb += y;
        sab += x * y;
        saa += x * x;
        sbb += y * y;
    }
    const double cov = sab / n - (sa / n) * (sb / n);
    const double rho = cov / std::sqrt((saa / n - sa * sa / n / n) * (sbb / n - sb * sb / n / n));
    CHECK(std::abs(rho) < 0.01);
}

TEST_CASE("uniform and normal draws have the right moments")
{
    RngStream r = rng_stream(1, 2);
    const int n = 200000;
    double s = 0, s2 = 0, ns = 0, ns2 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        s += u;
        s2 += u * u;
        const double z = r.normal();
        ns += z;
        ns2 += z * z;
    }
    CHECK(std::abs(s / n - 0.5) < 3.0 / std::sqrt(12.0 * n));
    CHECK(std::abs(ns / n) < 3.0 / std::sqrt(n));
    CHECK(std::abs(ns2 / n - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("parallel map equals the serial reference")
{
    auto fn = [](std::size_t i) {
        RngStream r = rng_stream(99, i);
        double acc = 0;
        for (int k = 0; k < 100; ++k)
            acc += r.uniform();
        return acc;
    };
    const auto serial = parallel::map_indexed_serial(257, fn);
    for (int w : {1, 2, 3, 8})
        CHECK(parallel::map_indexed(257, w, fn) == serial);
}

TEST_CASE("parallel map rethrows the lowest failing index")
{
    auto fn = [](std::size_t i) -> int {
        if (i == 40 || i == 90)
            throw std::runtime_error("fail " + std::to_string(i));
        return static_cast<int>(i);
    };
    for (int w : {1, 2, 4}) {
        try {
            parallel::map_indexed(128, w, fn);
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "fail 40");
        }
    }
}

TEST_CASE("worker count honours LOGLAW_WORKERS")
{
    ::setenv("LOGLAW_WORKERS", "3", 1);
    CHECK(parallel::default_workers() == 3);
    CHECK(parallel::resolve_workers(0) == 3);
    CHECK(parallel::resolve_workers(5) == 5);
    ::unsetenv("LOGLAW_WORKERS");
    CHECK(parallel::default_workers() >= 1);
}

TEST_CASE("advance: cat fixed point, identity, closed-form linear flow")
{
    const auto cat = SystemModel::cat_map();
    const auto x = std::get<systems::TorusPoint>(advance(cat, systems::TorusPoint{0, 0}, 5));
    CHECK(x.x == 0);
    CHECK(x.y == 0);

    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::with_slope(1.0));
    const auto p = std::get<systems::PlanarTorusPoint>(advance(flow, systems::PlanarTorusPoint{0.0, 0.0}, 0.25));
    CHECK(p.x == doctest::Approx(0.25 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.25 / std::sqrt(2.0)).epsilon(1e-12));

    RngStream r = rng_stream(5, 0);
    for (const auto& model : {SystemModel::cat_map(), SystemModel::doubling_map(),
                              SystemModel::geodesic(hyperbolic::DomainVariant::bolza)}) {
        const PhasePoint y = sample_point(model, r);
        CHECK(coords(advance(model, y, 0)) == coords(y));
    }
}

TEST_CASE("linear flow of slope 1 moves (0,0) to (0.25, 0.25) in time 0.25 sqrt 2")
{
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::with_slope(1.0));
    const auto p =
        std::get<systems::PlanarTorusPoint>(advance(flow, systems::PlanarTorusPoint{0.0, 0.0}, 0.25 * std::sqrt(2.0)));
    CHECK(p.x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("advance rejects bad time arguments")
{
    const auto cat = SystemModel::cat_map();
    CHECK_THROWS_AS(advance(cat, systems::TorusPoint{1, 2}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(advance(cat, systems::TorusPoint{1, 2}, -1.0), InvalidArgument);
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
    CHECK_THROWS_AS(advance(flow, systems::PlanarTorusPoint{0.1, 0.2}, -0.1), InvalidArgument);
    CHECK_THROWS_AS(advance(flow, systems::PlanarTorusPoint{std::nan(""), 0.2}, 0.1), NumericDomainError);
}

TEST_CASE("advance is a one-parameter action")
{
    RngStream r = rng_stream(8, 1);
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
    const auto susp = SystemModel::suspension(systems::SuspensionSpec::make({systems::TorusMapVariant::cat}, 1.0, 0.5));
    const auto geo = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    for (int k = 0; k < 20; ++k) {
        const double s = r.uniform(0.0, 5.0), t = r.uniform(0.0, 5.0);
        for (const auto* m : {&flow, &susp}) {
            const PhasePoint x = sample_point(*m, r);
            const auto a = coords(advance(*m, advance(*m, x, s), t));
            const auto b = coords(advance(*m, x, s + t));
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = std::abs(a[i] - b[i]);
                CHECK(std::min(d, 1.0 - d) < 1e-9);
            }
        }
        const PhasePoint x = sample_point(geo, r);
        const auto& ga = std::get<hyperbolic::UnitTangent>(advance(geo, advance(geo, x, s), t));
        const auto& gb = std::get<hyperbolic::UnitTangent>(advance(geo, x, s + t));
        CHECK(hyperbolic::hyp_distance(ga.base(), gb.base()) < 1e-8);
        const auto cat = SystemModel::cat_map();
        const PhasePoint y = sample_point(cat, r);
        CHECK(coords(advance(cat, advance(cat, y, 3), 4)) == coords(advance(cat, y, 7)));
    }
}

TEST_CASE("invariant samplers: Lebesgue moments and domain membership")
{
    RngStream r = rng_stream(11, 0);
    const auto dbl = sample_invariant(SystemModel::doubling_map(), r, 100000);
    double mean = 0;
    for (const auto& x : dbl)
        mean += coords(x)[0];
    mean /= 1e5;
    CHECK(std::abs(mean - 0.5) < 3.0 / std::sqrt(12.0 * 1e5));

    const auto cat = sample_invariant(SystemModel::cat_map(), r, 100000);
    double box = 0;
    for (const auto& x : cat) {
        const auto c = coords(x);
        box += (c[0] < 0.5 && c[1] < 0.5) ? 1.0 : 0.0;
    }
    CHECK(std::abs(box / 1e5 - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / 1e5));

    const auto modular = SystemModel::geodesic(hyperbolic::DomainVariant::modular);
    const auto pts = sample_invariant(modular, r, 100000);
    bool inside = true;
    for (const auto& x : pts)
        inside = inside && modular.domain()->contains(std::get<hyperbolic::UnitTangent>(x).base());
    CHECK(inside);
}

TEST_CASE("sample_invariant is deterministic given the stream")
{
    RngStream a = rng_stream(3, 4), b = rng_stream(3, 4);
    const auto model = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto xa = sample_invariant(model, a, 50), xb = sample_invariant(model, b, 50);
    for (std::size_t i = 0; i < xa.size(); ++i)
        CHECK(coords(xa[i]) == coords(xb[i]));
}

TEST_CASE("maps preserve Lebesgue measure on boxes")
{
    RngStream r = rng_stream(21, 0);
    for (const auto& model : {SystemModel::cat_map(), SystemModel::doubling_map(),
                              SystemModel::rotation(systems::RotationSpec::golden())}) {
        const int n = 100000;
        int hits_a = 0, hits_pre = 0;
        for (int i = 0; i < n; ++i) {
            const PhasePoint x = sample_point(model, r);
            const auto c0 = coords(x);
            const auto c3 = coords(advance(model, x, 3));
            hits_a += c0[0] < 0.3 ? 1 : 0;
            hits_pre += c3[0] < 0.3 ? 1 : 0;
        }
        const double sigma = std::sqrt(0.3 * 0.7 / n);
        CHECK(std::abs(hits_pre / double(n) - 0.3) < 3.0 * sigma);
        CHECK(std::abs(hits_a / double(n) - 0.3) < 3.0 * sigma);
    }
}

TEST_CASE("velocity bound holds along flows")
{
    RngStream r = rng_stream(22, 0);
    const auto flow = SystemModel::linear_flow(systems::LinearTorusFlowSpec::golden());
    for (int i = 0; i < 200; ++i) {
        const auto x = std::get<systems::PlanarTorusPoint>(sample_point(flow, r));
        const double t = r.uniform(0.0, 0.3);
        const auto y = std::get<systems::PlanarTorusPoint>(advance(flow, x, t));
        CHECK(systems::torus_distance(x, y) <= flow.velocity_bound() * t + 1e-12);
    }
    const auto geo = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    for (int i = 0; i < 200; ++i) {
        const auto u = std::get<hyperbolic::UnitTangent>(sample_point(geo, r));
        const double t = r.uniform(0.0, 2.0);
        const auto v = hyperbolic::geodesic_advance(u, t);
        CHECK(hyperbolic::hyp_distance(u.base(), v.base()) == doctest::Approx(t).epsilon(1e-9));
    }
}

TEST_CASE("target levels vanish at the center and are Lipschitz")
{
    RngStream r = rng_stream(23, 0);
    const auto cat = SystemModel::cat_map();
    const auto center = systems::TorusPoint::from_doubles(0.3, 0.7);
    const auto t = TargetFamily::base_ball(cat, center);
    CHECK(t.level(center) == 0.0);
    CHECK(t.kind() == TargetKind::base_ball);
    CHECK(to_string(t.kind()) == "base-ball");

    const auto geo = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    const auto c = hyperbolic::UnitTangent::from_point({0.0, 1.0}, 0.0);
    const auto base = TargetFamily::base_ball(geo, c, 1.0);
    const auto sas = TargetFamily::sasaki_ball(geo, c, 1.0);
    CHECK(base.level(c) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sas.level(c) == doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 0; i < 300; ++i) {
        const auto u = std::get<hyperbolic::UnitTangent>(sample_point(geo, r));
        const double dt = r.uniform(0.0, 0.2);
        const PhasePoint v = advance(geo, u, dt);
        CHECK(std::abs(base.level(u) - base.level(v)) <= dt + 1e-9);
        CHECK(std::abs(sas.level(u) - sas.level(v)) <= dt * geo.velocity_bound() + 1e-9);
    }
}

TEST_CASE("coordinate strips and sublevel families")
{
    const auto cat = SystemModel::cat_map();
    const auto strip = TargetFamily::coordinate_strip(cat, 1, 0.25);
    CHECK(strip.level(systems::TorusPoint::from_doubles(0.9, 0.3)) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK_THROWS_AS(TargetFamily::coordinate_strip(cat, 2, 0.25), InvalidArgument);
    CHECK_THROWS_AS(TargetFamily::coordinate_strip(SystemModel::geodesic(hyperbolic::DomainVariant::bolza), 0, 0.1),
                    InvalidArgument);
    CHECK_THROWS_AS(TargetFamily::sublevel("bad", nullptr, 1.0, systems::TorusPoint{}), InvalidArgument);
}

TEST_CASE("phase points report valid coordinates")
{
    CHECK(coords(systems::TorusPoint::from_doubles(0.25, 0.5)) == std::vector<double>{0.25, 0.5});
    CHECK(coords_valid(systems::PlanarTorusPoint{0.1, 0.2}));
    CHECK_FALSE(coords_valid(systems::PlanarTorusPoint{1.5, 0.2}));
    const PhasePoint u = hyperbolic::UnitTangent::from_point({0.1, 2.0}, 1.0);
    const auto c = coords(u);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == doctest::Approx(0.1));
    CHECK(c[1] == doctest::Approx(2.0));
    CHECK(c[2] == doctest::Approx(1.0));
}
