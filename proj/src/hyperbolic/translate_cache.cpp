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

#include "loglaw/hyperbolic/translate_cache.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>

#include "loglaw/core/error.hpp"

namespace loglaw::hyperbolic {

namespace {

constexpr double kMargin = 1e-6;

struct IntMatrix {
    std::int64_t a, b, c, d;
};

// (a, b) with a*d - b*c = 1 for coprime (c, d).
IntMatrix complete_row(std::int64_t c, std::int64_t d)
{
    std::int64_t old_r = d, r = c;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    // old_s * d + old_t * c = old_r = +-1
    std::int64_t a = old_s, b = -old_t;
    if (old_r < 0) {
        a = -a;
        b = -b;
    }
    return {a, b, c, d};
}

void enumerate_modular(Complex p, double reach, std::vector<MobiusTransform>& out)
{
    const double y_min = 0.5 * std::sqrt(3.0) * std::exp(-reach);
    const double bound = p.imag() / y_min;
    const double spread = std::exp(0.5 * reach) * std::sqrt(2.0 * (std::cosh(reach) - 1.0));
    const auto c_max = static_cast<std::int64_t>(std::floor(std::sqrt(bound) / p.imag()));
    for (std::int64_t c = 0; c <= c_max; ++c) {
        const double rest = bound - static_cast<double>(c * c) * p.imag() * p.imag();
        if (rest < 0.0)
            continue;
        const double centre = -static_cast<double>(c) * p.real();
        const auto d_lo = static_cast<std::int64_t>(std::ceil(centre - std::sqrt(rest)));
        const auto d_hi = static_cast<std::int64_t>(std::floor(centre + std::sqrt(rest)));
        for (std::int64_t d = d_lo; d <= d_hi; ++d) {
            if (c == 0 && d != 1)
                continue;
            if (std::gcd(c, d) != 1)
                continue;
            const IntMatrix m = complete_row(c, d);
            const MobiusTransform base{static_cast<double>(m.a), static_cast<double>(m.b),
                                       static_cast<double>(m.c), static_cast<double>(m.d)};
            const Complex w = base.apply(p);
            if (w.imag() < y_min)
                continue;
            const double width = 0.5 + w.imag() * spread;
            const auto n_lo = static_cast<std::int64_t>(std::ceil(-width - w.real()));
            const auto n_hi = static_cast<std::int64_t>(std::floor(width - w.real()));
            for (std::int64_t n = n_lo; n <= n_hi; ++n)
                out.push_back(horizontal_shift(static_cast<double>(n)) * base);
        }
    }
}

void enumerate_compact(const FuchsianDomain& dom, Complex p, double reach, std::vector<MobiusTransform>& out)
{
    const Complex o = dom.center();
    const double cover = dom.cover_radius();
    const double explore = 2.0 * cover + reach + 1e-3;
    std::vector<MobiusTransform> tiles{MobiusTransform::identity()};
    std::vector<Complex> tile_centers{o};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const MobiusTransform gamma = tiles[queue.front()];
        queue.pop_front();
        for (const MobiusTransform& g : dom.generators()) {
            const MobiusTransform next = (gamma * g).normalized();
            const Complex c = next.apply(o);
            if (hyp_distance(c, o) > explore)
                continue;
            const bool seen = std::any_of(tile_centers.begin(), tile_centers.end(),
                                          [&](Complex q) { return hyp_distance(q, c) < 1e-6; });
            if (seen)
                continue;
            tiles.push_back(next);
            tile_centers.push_back(c);
            queue.push_back(tiles.size() - 1);
        }
    }
    for (const MobiusTransform& gamma : tiles)
        if (hyp_distance(gamma.apply(p), o) <= cover + reach)
            out.push_back(gamma);
}

} // namespace

TranslateCache::TranslateCache(const FuchsianDomain& dom, Complex p, double r_max)
    : center_(p), r_max_(r_max)
{
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        throw InvalidArgument("TranslateCache: r_max must be positive and finite");
    if (!dom.contains(p, 1e-9))
        throw InvalidArgument("TranslateCache: center must lie in the fundamental domain");
    const double reach = r_max + kMargin;
    if (dom.variant() == DomainVariant::modular)
        enumerate_modular(p, reach, elements_);
    else
        enumerate_compact(dom, p, reach, elements_);
    points_.reserve(elements_.size());
    for (const auto& g : elements_)
        points_.push_back(g.apply(p));
}

double TranslateCache::truncated_distance(Complex z) const noexcept
{
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& w : points_)
        best = std::min(best, sinh2_half_distance(z, w));
    return std::min(r_max_, distance_from_sinh2_half(best));
}

std::vector<MobiusTransform> TranslateCache::translate_frames(const MobiusTransform& frame) const
{
    std::vector<MobiusTransform> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_)
        out.push_back((g * frame).normalized());
    return out;
}

double truncated_sasaki_distance(const MobiusTransform& g, const std::vector<MobiusTransform>& frames, double cap) noexcept
{
    double best = cap;
    for (const auto& f : frames)
        best = std::min(best, sasaki_distance(g, f));
    return best;
}

} // namespace loglaw::hyperbolic
