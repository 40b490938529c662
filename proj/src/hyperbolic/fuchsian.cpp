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

#include "loglaw/hyperbolic/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "loglaw/core/error.hpp"

namespace loglaw::hyperbolic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConstructionTolerance = 1e-9;

// Proportional to sinh^2(d(z, w) / 2) for fixed z.
double scaled_gap(Complex z, Complex w) noexcept
{
    return std::norm(z - w) / w.imag();
}

Complex point_at(double direction_offset, double distance)
{
    return rotation_about_i(direction_offset).apply(Complex(0.0, std::exp(distance)));
}

double octagon_inradius() { return std::acosh(1.0 + std::numbers::sqrt2); }
double octagon_circumradius() { return std::acosh(3.0 + 2.0 * std::numbers::sqrt2); }

} // namespace

FuchsianDomain FuchsianDomain::modular()
{
    FuchsianDomain dom;
    dom.variant_ = DomainVariant::modular;
    dom.name_ = "modular";
    dom.generators_ = {horizontal_shift(1.0), horizontal_shift(-1.0), MobiusTransform{0.0, -1.0, 1.0, 0.0}};
    dom.inverse_ = {1, 0, 2};
    dom.area_ = kPi / 3.0;
    dom.cover_radius_ = std::numeric_limits<double>::infinity();
    dom.reference_ = Complex(0.0, 2.0);
    if (dom.relation_error() > kConstructionTolerance || dom.side_pairing_error() > kConstructionTolerance)
        throw NumericDomainError("modular group construction failed its self-check");
    return dom;
}

FuchsianDomain FuchsianDomain::bolza()
{
    FuchsianDomain dom;
    dom.variant_ = DomainVariant::bolza;
    dom.name_ = "bolza";
    dom.inradius_ = octagon_inradius();
    dom.cover_radius_ = octagon_circumradius();
    dom.area_ = 4.0 * kPi;
    dom.reference_ = Complex(0.0, 1.0);

    const MobiusTransform g0 = axial_translation(2.0 * dom.inradius_);
    for (int k = 0; k < 8; ++k) {
        const MobiusTransform r = rotation_about_i(k * kPi / 4.0);
        dom.generators_.push_back((r * g0 * r.inverse()).normalized());
        dom.inverse_.push_back((k + 4) % 8);
    }
    for (const auto& g : dom.generators_)
        dom.neighbor_centers_.push_back(g.apply(Complex(0.0, 1.0)));

    if (dom.relation_error() > kConstructionTolerance || dom.side_pairing_error() > kConstructionTolerance)
        throw NumericDomainError("octagon group construction failed its self-check");
    return dom;
}

bool FuchsianDomain::contains(Complex z, double tol) const noexcept
{
    if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        return false;
    if (variant_ == DomainVariant::modular)
        return std::abs(z.real()) <= 0.5 + tol && std::norm(z) >= 1.0 - tol;
    const double own = scaled_gap(z, Complex(0.0, 1.0));
    for (const Complex& c : neighbor_centers_)
        if (own > scaled_gap(z, c) * (1.0 + tol))
            return false;
    return true;
}

int FuchsianDomain::most_violated(Complex z) const noexcept
{
    const double own = scaled_gap(z, Complex(0.0, 1.0));
    int best = -1;
    double best_ratio = 1.0 + 1e-13;
    for (std::size_t k = 0; k < neighbor_centers_.size(); ++k) {
        const double other = scaled_gap(z, neighbor_centers_[k]);
        if (own > best_ratio * other) {
            best_ratio = own / other;
            best = static_cast<int>(k);
        }
    }
    return best;
}

Reduction FuchsianDomain::reduce_to_domain(const UnitTangent& u, std::size_t word_cap) const
{
    MobiusTransform g = u.group_element();
    MobiusTransform gamma = MobiusTransform::identity();
    std::vector<int> word;

    auto push = [&](int k) {
        if (word.size() >= word_cap) {
            const Complex z = g.apply(Complex(0.0, 1.0));
            throw ReductionFailure("reduction word exceeded its cap", z.real(), z.imag(), word);
        }
        word.push_back(k);
        g = (generators_[static_cast<std::size_t>(k)] * g).normalized();
        gamma = (generators_[static_cast<std::size_t>(k)] * gamma).normalized();
    };

    if (variant_ == DomainVariant::modular) {
        for (;;) {
            const Complex z = g.apply(Complex(0.0, 1.0));
            const double shift = std::round(z.real());
            if (shift != 0.0) {
                const int letter = shift > 0.0 ? 1 : 0;
                for (double s = std::abs(shift); s > 0.0; s -= 1.0)
                    push(letter);
                continue;
            }
            if (std::norm(z) < 1.0 - 1e-15) {
                push(2);
                continue;
            }
            break;
        }
    } else {
        for (;;) {
            const int k = most_violated(g.apply(Complex(0.0, 1.0)));
            if (k < 0)
                break;
            push(inverse_[static_cast<std::size_t>(k)]);
        }
    }
    return {UnitTangent(g), std::move(word), gamma};
}

MobiusTransform FuchsianDomain::reduce_frame(const MobiusTransform& g_in, std::size_t iteration_cap) const
{
    MobiusTransform g = g_in;
    for (std::size_t it = 0;; ++it) {
        const Complex z = g.apply(Complex(0.0, 1.0));
        if (!(z.imag() > 0.0) || !std::isfinite(z.real()))
            throw NumericDomainError("frame left the upper half plane during reduction");
        if (it >= iteration_cap)
            throw ReductionFailure("reduction exceeded its iteration cap", z.real(), z.imag(), {});
        if (variant_ == DomainVariant::modular) {
            const double shift = std::round(z.real());
            if (shift != 0.0) {
                g = horizontal_shift(-shift) * g;
                continue;
            }
            if (std::norm(z) < 1.0 - 1e-15) {
                g = generators_[2] * g;
                continue;
            }
        } else {
            const int k = most_violated(z);
            if (k >= 0) {
                g = generators_[static_cast<std::size_t>(inverse_[static_cast<std::size_t>(k)])] * g;
                continue;
            }
        }
        return g.normalized();
    }
}

bool FuchsianDomain::propose(RngStream& rng, MobiusTransform& out) const
{
    if (variant_ == DomainVariant::modular) {
        const double x = rng.uniform() - 0.5;
        const double y = 0.5 * std::sqrt(3.0) / (1.0 - rng.uniform());
        const double theta = 2.0 * kPi * rng.uniform();
        const Complex z(x, y);
        if (std::norm(z) < 1.0)
            return false;
        out = UnitTangent::from_point(z, theta).group_element();
        return true;
    }
    const double cosh_rho = 1.0 + rng.uniform() * (std::cosh(cover_radius_) - 1.0);
    const double psi = 2.0 * kPi * rng.uniform();
    const double phi = 2.0 * kPi * rng.uniform();
    out = (rotation_about_i(psi) * axial_translation(std::acosh(cosh_rho)) * rotation_about_i(phi)).normalized();
    return contains(out.apply(Complex(0.0, 1.0)), 0.0);
}

UnitTangent FuchsianDomain::liouville_sample(RngStream& rng, long attempt_cap) const
{
    MobiusTransform g;
    for (long attempt = 1; attempt <= attempt_cap; ++attempt)
        if (propose(rng, g))
            return UnitTangent(g);
    throw SamplingFailure("Liouville sampler exceeded its attempt cap", 0.0, attempt_cap);
}

AreaEstimate FuchsianDomain::monte_carlo_area(RngStream& rng, long n) const
{
    if (n < 1)
        throw InvalidArgument("monte_carlo_area: n must be positive");
    const double box = variant_ == DomainVariant::modular ? 1.0 / std::sqrt(3.0) * 2.0
                                                          : 2.0 * kPi * (std::cosh(cover_radius_) - 1.0);
    long accepted = 0;
    MobiusTransform g;
    for (long i = 0; i < n; ++i)
        accepted += propose(rng, g) ? 1 : 0;
    const double p = static_cast<double>(accepted) / static_cast<double>(n);
    return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(n)), p, n};
}

double FuchsianDomain::relation_error() const
{
    const auto& g = generators_;
    if (variant_ == DomainVariant::modular) {
        const MobiusTransform st = g[2] * g[0];
        return std::max(projective_distance(g[2] * g[2], MobiusTransform::identity()),
                        projective_distance(st * st * st, MobiusTransform::identity()));
    }
    // g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3
    const MobiusTransform product = g[0] * g[5] * g[2] * g[7] * g[4] * g[1] * g[6] * g[3];
    double err = projective_distance(product, MobiusTransform::identity());
    for (int k = 0; k < 8; ++k)
        err = std::max(err, projective_distance(g[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(inverse_[static_cast<std::size_t>(k)])],
                                                MobiusTransform::identity()));
    return err;
}

double FuchsianDomain::side_pairing_error() const
{
    double err = 0.0;
    if (variant_ == DomainVariant::modular) {
        // T: left vertical side to right one; S: unit arc to itself, reversed.
        const Complex rho(-0.5, 0.5 * std::sqrt(3.0));
        const Complex rho_plus(0.5, 0.5 * std::sqrt(3.0));
        err = std::max(err, std::abs(generators_[0].apply(rho) - rho_plus));
        err = std::max(err, std::abs(generators_[1].apply(rho_plus) - rho));
        err = std::max(err, std::abs(generators_[2].apply(rho) - rho_plus));
        err = std::max(err, std::abs(generators_[2].apply(Complex(0.0, 1.0)) - Complex(0.0, 1.0)));
        return err;
    }
    for (int k = 0; k < 8; ++k) {
        const MobiusTransform& g = generators_[static_cast<std::size_t>(k)];
        const int src = (k + 4) % 8;
        err = std::max(err, hyp_distance(g.apply(point_at(src * kPi / 4.0, inradius_)), point_at(k * kPi / 4.0, inradius_)));
        const Complex target_vertices[2] = {point_at(k * kPi / 4.0 - kPi / 8.0, cover_radius_),
                                            point_at(k * kPi / 4.0 + kPi / 8.0, cover_radius_)};
        for (double sign : {-1.0, 1.0}) {
            const Complex image = g.apply(point_at(src * kPi / 4.0 + sign * kPi / 8.0, cover_radius_));
            err = std::max(err, std::min(hyp_distance(image, target_vertices[0]), hyp_distance(image, target_vertices[1])));
        }
    }
    return err;
}

} // namespace loglaw::hyperbolic
