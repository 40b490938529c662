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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loglaw/core/error.hpp"
#include "loglaw/core/rng.hpp"
#include "loglaw/hyperbolic/ball_scan.hpp"
#include "loglaw/hyperbolic/fuchsian.hpp"
#include "loglaw/hyperbolic/mobius.hpp"
#include "loglaw/hyperbolic/translate_cache.hpp"
#include "loglaw/hyperbolic/unit_tangent.hpp"

using namespace loglaw;
using namespace loglaw::hyperbolic;

namespace {

// Time up to which scans with different step sequences are compared.
constexpr double kShadowHorizon = 20.0;

MobiusTransform random_element(RngStream& r)
{
    return (rotation_about_i(r.uniform(0.0, 2.0 * std::numbers::pi)) * axial_translation(r.uniform(-2.0, 2.0)) *
            rotation_about_i(r.uniform(0.0, 2.0 * std::numbers::pi)))
        .normalized();
}

Complex random_point(RngStream& r) { return {r.uniform(-2.0, 2.0), std::exp(r.uniform(-1.5, 1.5))}; }

/// Quotient distance by brute force over a large enumeration of group words.
double brute_quotient_distance(const FuchsianDomain& dom, Complex z, Complex p, int depth)
{
    std::vector<MobiusTransform> frontier = {MobiusTransform::identity()}, all = frontier;
    for (int k = 0; k < depth; ++k) {
        std::vector<MobiusTransform> next;
        for (const auto& g : frontier)
            for (const auto& s : dom.generators())
                next.push_back(s * g);
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    double best = INFINITY;
    for (const auto& g : all)
        best = std::min(best, hyp_distance(z, g.apply(p)));
    return best;
}

} // namespace

TEST_CASE("hyperbolic distance examples and invariance")
{
    CHECK(hyp_distance({0, 1}, {0, 1}) == 0.0);
    CHECK(hyp_distance({0, 1}, {0, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(hyp_distance({0, 0}, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(hyp_distance({0, 1}, {0, -1}), InvalidArgument);
    RngStream r = rng_stream(1, 0);
    for (int i = 0; i < 200; ++i) {
        const Complex z = random_point(r), w = random_point(r), v = random_point(r);
        const auto g = random_element(r);
        const double d = hyp_distance(z, w);
        CHECK(d == doctest::Approx(hyp_distance(w, z)).epsilon(1e-12));
        CHECK(hyp_distance(g.apply(z), g.apply(w)) == doctest::Approx(d).epsilon(1e-9));
        CHECK(hyp_distance(z, v) <= d + hyp_distance(w, v) + 1e-12);
    }
}

TEST_CASE("Mobius algebra")
{
    RngStream r = rng_stream(2, 0);
    const auto g = random_element(r), h = random_element(r);
    CHECK((g * h).det() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(projective_distance(g * g.inverse(), MobiusTransform::identity()) < 1e-12);
    const Complex z{0.3, 0.7};
    const Complex a = (g * h).apply(z), b = g.apply(h.apply(z));
    CHECK(std::abs(a - b) < 1e-12);
    CHECK(horizontal_shift(1.5).apply(z) == Complex(1.8, 0.7));
    CHECK(std::abs(axial_translation(std::log(4.0)).apply({0, 1}) - Complex(0, 4)) < 1e-14);
    CHECK_THROWS_AS((MobiusTransform{0, 0, 0, 0}).normalized(), NumericDomainError);
}

TEST_CASE("geodesic_advance examples")
{
    const auto u = UnitTangent(MobiusTransform::identity());
    CHECK(u.base() == Complex(0, 1));
    CHECK(u.theta() == doctest::Approx(std::numbers::pi / 2));
    const auto v = geodesic_advance(u, 1.5);
    CHECK(std::abs(v.base() - Complex(0, std::exp(1.5))) < 1e-12);
    CHECK(std::abs(geodesic_advance(u, 0.0).base() - u.base()) == 0.0);

    RngStream r = rng_stream(3, 0);
    for (int i = 0; i < 100; ++i) {
        const UnitTangent w(random_element(r));
        const double s = r.uniform(-3, 3), t = r.uniform(-3, 3);
        const auto a = geodesic_advance(geodesic_advance(w, s), t);
        const auto b = geodesic_advance(w, s + t);
        CHECK(projective_distance(a.group_element(), b.group_element()) < 1e-9);
        CHECK(a.projection_consistent());
        CHECK(hyp_distance(w.base(), b.base()) == doctest::Approx(std::abs(s + t)).epsilon(1e-8));
    }
}

TEST_CASE("from_point round-trips base and angle")
{
    RngStream r = rng_stream(4, 0);
    for (int i = 0; i < 100; ++i) {
        const Complex z = random_point(r);
        const double th = r.uniform(0.0, 2.0 * std::numbers::pi);
        const auto u = UnitTangent::from_point(z, th);
        CHECK(std::abs(u.base() - z) < 1e-12);
        const double dth = std::remainder(u.theta() - th, 2.0 * std::numbers::pi);
        CHECK(std::abs(dth) < 1e-12);
    }
}

TEST_CASE("Sasaki surrogate examples")
{
    RngStream r = rng_stream(5, 0);
    for (int i = 0; i < 100; ++i) {
        const UnitTangent u(random_element(r)), v(random_element(r));
        CHECK(sasaki_distance(u, u) == doctest::Approx(0.0).epsilon(1e-7));
        CHECK(sasaki_distance(u, v) == doctest::Approx(sasaki_distance(v, u)).epsilon(1e-9));
        const Complex z = random_point(r);
        const double phi = r.uniform(-3.0, 3.0);
        const double th = r.uniform(0.0, 6.0);
        CHECK(sasaki_distance(UnitTangent::from_point(z, th), UnitTangent::from_point(z, th + phi)) ==
              doctest::Approx(std::abs(phi)).epsilon(1e-9));
    }
}

TEST_CASE("Sasaki surrogate reduces to base distance along one geodesic and is 1-Lipschitz in time")
{
    RngStream r = rng_stream(6, 0);
    for (int i = 0; i < 100; ++i) {
        const UnitTangent u(random_element(r));
        const double t = r.uniform(0.0, 3.0);
        CHECK(sasaki_distance(u, geodesic_advance(u, t)) == doctest::Approx(t).epsilon(1e-9));
        const UnitTangent v(random_element(r));
        const double d0 = sasaki_distance(u, v);
        const double d1 = sasaki_distance(u, geodesic_advance(v, 0.01));
        CHECK(std::abs(d1 - d0) <= 0.01 * 1.0000001 + 1e-9);
    }
}

TEST_CASE("modular group relations and domain")
{
    const auto dom = FuchsianDomain::modular();
    CHECK(dom.relation_error() < 1e-9);
    CHECK(dom.side_pairing_error() < 1e-9);
    CHECK(dom.area() == doctest::Approx(std::numbers::pi / 3.0));
    CHECK(dom.contains({0.0, 2.0}));
    CHECK_FALSE(dom.contains({0.6, 2.0}));
    CHECK_FALSE(dom.contains({0.0, 0.9}));
}

TEST_CASE("Bolza group relations, side pairings and area")
{
    const auto dom = FuchsianDomain::bolza();
    CHECK(dom.generators().size() == 8);
    CHECK(dom.relation_error() < 1e-9);
    CHECK(dom.side_pairing_error() < 1e-9);
    CHECK(dom.area() == doctest::Approx(4.0 * std::numbers::pi));
    for (int k = 0; k < 8; ++k) {
        const auto& g = dom.generators()[static_cast<std::size_t>(k)];
        const auto& gi = dom.generators()[static_cast<std::size_t>(dom.inverse_index(k))];
        CHECK(projective_distance(g * gi, MobiusTransform::identity()) < 1e-12);
        CHECK(hyp_distance(g.apply({0, 1}), {0, 1}) == doctest::Approx(2.0 * std::acosh(1.0 + std::sqrt(2.0))).epsilon(1e-12));
    }
    CHECK(dom.cover_radius() == doctest::Approx(std::acosh(3.0 + 2.0 * std::sqrt(2.0))));
}

TEST_CASE("reduction: identity inside, postcondition and round trip")
{
    const auto modular = FuchsianDomain::modular();
    const auto inside = UnitTangent::from_point({0.1, 1.5}, 0.3);
    CHECK(modular.reduce_to_domain(inside).word.empty());

    const auto red = modular.reduce_to_domain(UnitTangent::from_point({2.3, 0.8}, 1.1));
    CHECK(std::abs(red.reduced.base().real()) <= 0.5 + 1e-12);
    CHECK(std::abs(red.reduced.base()) >= 1.0 - 1e-12);

    const auto bolza = FuchsianDomain::bolza();
    RngStream r = rng_stream(7, 0);
    for (const auto* dom : {&modular, &bolza}) {
        for (int i = 0; i < 300; ++i) {
            const UnitTangent u = UnitTangent::from_point(random_point(r), r.uniform(0.0, 6.0));
            const auto res = dom->reduce_to_domain(u);
            CHECK(dom->contains(res.reduced.base(), 1e-9));
            MobiusTransform g = MobiusTransform::identity();
            for (int k : res.word)
                g = dom->generators()[static_cast<std::size_t>(k)] * g;
            CHECK(projective_distance(g, res.gamma) < 1e-9);
            const auto back = g.inverse() * res.reduced.group_element();
            CHECK(projective_distance(back, u.group_element()) < 1e-9);
        }
    }
}

TEST_CASE("reduction word cap raises reduction failure")
{
    const auto modular = FuchsianDomain::modular();
    const auto far = UnitTangent::from_point({1000.5, 0.001}, 0.0);
    try {
        modular.reduce_to_domain(far, 3);
        FAIL("expected reduction failure");
    } catch (const ReductionFailure& e) {
        CHECK(e.partial_word().size() <= 3);
        CHECK(e.im() > 0.0);
    }
}

TEST_CASE("flow and reduction commute in the quotient")
{
    const auto dom = FuchsianDomain::bolza();
    RngStream r = rng_stream(8, 0);
    for (int i = 0; i < 50; ++i) {
        const UnitTangent u = dom.liouville_sample(r);
        const double t = r.uniform(0.0, 6.0);
        const auto a = dom.reduce_to_domain(geodesic_advance(u, t)).reduced;
        UnitTangent b = u;
        for (int k = 0; k < 6; ++k)
            b = dom.reduce_to_domain(geodesic_advance(b, t / 6.0)).reduced;
        CHECK(hyp_distance(a.base(), b.base()) < 1e-9);
    }
}

TEST_CASE("Liouville samples lie in the domain with uniform angles")
{
    for (const auto& dom : {FuchsianDomain::modular(), FuchsianDomain::bolza()}) {
        RngStream r = rng_stream(9, 0);
        std::vector<double> angles;
        for (int i = 0; i < 20000; ++i) {
            const auto u = dom.liouville_sample(r);
            CHECK(dom.contains(u.base()));
            angles.push_back(u.theta() / (2.0 * std::numbers::pi));
        }
        std::sort(angles.begin(), angles.end());
        double ks = 0.0;
        const double n = static_cast<double>(angles.size());
        for (std::size_t i = 0; i < angles.size(); ++i)
            ks = std::max({ks, std::abs(angles[i] - i / n), std::abs(angles[i] - (i + 1) / n)});
        CHECK(ks < 1.63 / std::sqrt(n));
    }
}

TEST_CASE("Monte Carlo areas match Gauss-Bonnet")
{
    RngStream r = rng_stream(10, 0);
    const auto m = FuchsianDomain::modular().monte_carlo_area(r, 100000);
    CHECK(std::abs(m.area / (std::numbers::pi / 3.0) - 1.0) < 0.02);
    const auto b = FuchsianDomain::bolza().monte_carlo_area(r, 100000);
    CHECK(std::abs(b.area / (4.0 * std::numbers::pi) - 1.0) < 0.02);
    CHECK(b.acceptance_rate > 0.0);
}

TEST_CASE("translate cache: exact truncated distance against brute-force enumeration")
{
    RngStream r = rng_stream(11, 0);
    for (const auto& dom : {FuchsianDomain::bolza(), FuchsianDomain::modular()}) {
        const Complex p = dom.reference_point();
        const TranslateCache cache(dom, p, 1.0);
        CHECK(cache.size() >= 1);
        for (int i = 0; i < 200; ++i) {
            const Complex z = dom.liouville_sample(r).base();
            const double brute = brute_quotient_distance(dom, z, p, dom.variant() == DomainVariant::bolza ? 2 : 4);
            const double cached = cache.truncated_distance(z);
            if (brute < 1.0)
                CHECK(cached == doctest::Approx(brute).epsilon(1e-9));
            else
                CHECK(cached >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("translate cache densification: more radius never finds a closer lift")
{
    const auto dom = FuchsianDomain::bolza();
    const TranslateCache small(dom, {0.0, 1.0}, 1.0), large(dom, {0.0, 1.0}, 2.5);
    CHECK(large.size() > small.size());
    RngStream r = rng_stream(12, 0);
    for (int i = 0; i < 500; ++i) {
        const Complex z = dom.liouville_sample(r).base();
        const double a = small.truncated_distance(z), b = large.truncated_distance(z);
        if (b < 1.0)
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
    CHECK_THROWS_AS(TranslateCache(dom, {5.0, 0.1}, 1.0), InvalidArgument);
}

TEST_CASE("perpendicular foot and closed-form ball entry")
{
    const auto g = MobiusTransform::identity();
    const auto foot = perpendicular_foot(g, {0.0, std::exp(2.0)});
    CHECK(foot.time == doctest::Approx(2.0));
    CHECK(foot.distance() == doctest::Approx(0.0).epsilon(1e-9));
    // Aimed straight at p from distance 2r: enters at time r.
    const double r = 0.2;
    CHECK(geodesic_ball_entry(g, {0.0, std::exp(2.0 * r)}, r) == doctest::Approx(r).epsilon(1e-12));
    CHECK(geodesic_ball_entry(g, {0.0, 1.0}, r) == 0.0);
    CHECK(geodesic_ball_entry(g, {0.0, 0.5}, r) < 0.0);
}

TEST_CASE("ball_entry_scan examples")
{
    const auto dom = FuchsianDomain::bolza();
    const TranslateCache cache(dom, {0.0, 1.0}, 1.0);
    const auto inside = UnitTangent::from_point({0.0, 1.05}, 0.4);
    CHECK(ball_entry_scan(dom, inside, cache, 0.1, 10.0) == 0.0);

    const double r = 0.1;
    const auto aimed = UnitTangent::from_point({0.0, std::exp(-2.0 * r)}, std::numbers::pi / 2);
    const auto t = ball_entry_scan(dom, aimed, cache, r, 10.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(r).epsilon(1e-9));
}

TEST_CASE("ball_entry_scan agrees with the fine-step oracle on the modular surface")
{
    const auto dom = FuchsianDomain::modular();
    const double r = 0.1;
    const TranslateCache cache(dom, {0.0, 2.0}, 1.0);
    RngStream rng = rng_stream(2024, 0);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        const auto u = dom.liouville_sample(rng);
        const auto fast = ball_entry_scan(dom, u, cache, r, kShadowHorizon);
        const auto fine = ball_entry_fine_scan(dom, u, cache, r, kShadowHorizon, r / 100.0);
        REQUIRE(fast.has_value() == fine.has_value());
        if (fast) {
            CHECK(*fast <= *fine + 1e-9);
            CHECK(*fine - *fast <= r * 1e-2);
            ++compared;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("ball_entry_scan never misses an entry seen by a 25x finer scan (Bolza, multi-radius)")
{
    const auto dom = FuchsianDomain::bolza();
    const TranslateCache cache(dom, {0.0, 1.0}, 1.0);
    const std::vector<double> radii = {0.25, 0.125, 0.0625};
    RngStream rng = rng_stream(2025, 0);
    int compared = 0;
    for (int i = 0; i < 100; ++i) {
        const auto u = dom.liouville_sample(rng);
        const auto fast = ball_entry_scan(dom, u, cache, radii, kShadowHorizon);
        for (std::size_t j = 0; j < radii.size(); ++j) {
            const auto fine = ball_entry_fine_scan(dom, u, cache, radii[j], kShadowHorizon, radii[j] / 100.0);
            compared += fine ? 1 : 0;
            REQUIRE(fast[j].has_value() == fine.has_value());
            if (fine) {
                CHECK(*fast[j] <= *fine + 1e-9);
                CHECK(*fine - *fast[j] <= radii[j] / 100.0 + 1e-9);
            }
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("running minimum is monotone and hits zero on a geodesic through p")
{
    const auto dom = FuchsianDomain::bolza();
    const TranslateCache cache(dom, {0.0, 1.0}, 1.0);
    RngStream rng = rng_stream(31, 0);
    const std::vector<double> grid = {2, 5, 10, 50, 100, 500, 1000};
    const auto curve = running_minimum_curve(dom, dom.liouville_sample(rng), cache, grid);
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i].running_min <= curve[i - 1].running_min);

    const auto through = UnitTangent::from_point({0.0, std::exp(-0.5)}, std::numbers::pi / 2);
    const auto c2 = running_minimum_curve(dom, through, cache, {2.0, 10.0});
    CHECK(c2[0].running_min == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(c2[1].running_min == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("running maximum toward the cusp is monotone and finite")
{
    const auto dom = FuchsianDomain::modular();
    RngStream rng = rng_stream(32, 0);
    const std::vector<double> grid = {2, 5, 10, 50, 100, 500};
    const auto curve = running_maximum_curve(dom, dom.liouville_sample(rng), dom.reference_point(), grid, 0.25);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(std::isfinite(curve[i].running_max));
        if (i > 0)
            CHECK(curve[i].running_max >= curve[i - 1].running_max);
    }
}
