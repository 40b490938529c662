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
#include <string>
#include <vector>

#include "loglaw/core/rng.hpp"
#include "loglaw/hyperbolic/mobius.hpp"
#include "loglaw/hyperbolic/unit_tangent.hpp"

namespace loglaw::hyperbolic {

enum class DomainVariant { modular, bolza };

/// Result of reduce_to_domain: reduced = gamma * input, gamma = word[n-1] ... word[0].
struct Reduction {
    UnitTangent reduced;
    std::vector<int> word;
    MobiusTransform gamma;
};

/// Monte Carlo area of the fundamental domain from the Liouville proposal.
struct AreaEstimate {
    double area;
    double stderr_area;
    double acceptance_rate;
    long samples;
};

/*!
 * Fundamental domain of a Fuchsian group together with its side pairings.
 *
 * modular: the standard domain |z| >= 1, |Re z| <= 1/2 of PSL(2, Z) with
 * generators [T, T^-1, S].
 *
 * bolza: the Dirichlet domain at i of the Bolza group, a regular octagon with
 * vertex angles pi/4. The eight generators are g_k = R(k pi/4) g_0 R(k pi/4)^-1
 * where g_0 translates along the imaginary axis by twice the inradius, and
 * g_{k+4} = g_k^-1. The construction is checked at build time.
 */
class FuchsianDomain {
public:
    static FuchsianDomain modular();
    static FuchsianDomain bolza();

    DomainVariant variant() const noexcept { return variant_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<MobiusTransform>& generators() const noexcept { return generators_; }
    int inverse_index(int k) const noexcept { return inverse_[static_cast<std::size_t>(k)]; }

    /// Hyperbolic area of the quotient surface.
    double area() const noexcept { return area_; }
    /// Natural base point: the octagon center i, or 2i on the modular surface.
    Complex reference_point() const noexcept { return reference_; }
    /// Center used for distance bounds (i for both variants).
    Complex center() const noexcept { return Complex(0.0, 1.0); }
    /// sup over the domain of the distance to center(); infinite for the modular surface.
    double cover_radius() const noexcept { return cover_radius_; }

    bool contains(Complex z, double tol = 1e-9) const noexcept;

    /// Reduction that records the generator word; throws ReductionFailure past `word_cap` letters.
    Reduction reduce_to_domain(const UnitTangent& u, std::size_t word_cap = 10000) const;

    /// Fast reduction of a frame without the word. Throws ReductionFailure past `iteration_cap` moves.
    MobiusTransform reduce_frame(const MobiusTransform& g, std::size_t iteration_cap = 10000) const;

    /// Liouville sample (area x uniform angle) by rejection; throws SamplingFailure past `attempt_cap` proposals.
    UnitTangent liouville_sample(RngStream& rng, long attempt_cap = 1000000) const;

    AreaEstimate monte_carlo_area(RngStream& rng, long n) const;

    /// Largest deviation from the identity of the defining relations (S^2, (ST)^3 or the octagon relation).
    double relation_error() const;
    /// Largest mismatch when each generator carries its source side onto its target side.
    double side_pairing_error() const;

private:
    FuchsianDomain() = default;

    /// One rejection proposal; returns whether it landed in the domain.
    bool propose(RngStream& rng, MobiusTransform& out) const;
    /// Index of the generator whose inverse should be applied next, or -1 when z is inside.
    int most_violated(Complex z) const noexcept;

    DomainVariant variant_ = DomainVariant::modular;
    std::string name_;
    std::vector<MobiusTransform> generators_;
    std::vector<int> inverse_;
    std::vector<Complex> neighbor_centers_;
    double area_ = 0.0;
    double cover_radius_ = 0.0;
    double inradius_ = 0.0;
    Complex reference_{0.0, 1.0};
};

} // namespace loglaw::hyperbolic
