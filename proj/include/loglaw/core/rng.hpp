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

#include <array>
#include <cstdint>
#include <limits>

namespace loglaw {

/// Philox4x32-10 block function: maps (counter, key) to 128 random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                         std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer, used to derive sub-stream indices.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/*!
 * Counter-based random stream.
 *
 * The n-th output is a pure function of (master_seed, stream_index, n): the
 * seed is the Philox key and (n / 2, stream_index) is the 128-bit counter.
 * Copying a stream copies its position, so two copies replay the same values.
 */
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream() = default;
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t counter = 0) noexcept
        : seed_(master_seed), stream_(stream_index), counter_(counter) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next_u64(); }
    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller; consumes two outputs.
    double normal() noexcept;

    /// Independent stream keyed by (seed, mix(stream_index, tag)).
    RngStream split(std::uint64_t tag) const noexcept
    {
        return RngStream(seed_, mix64(stream_ ^ mix64(tag + 0x9e3779b97f4a7c15ull)), 0);
    }

    std::uint64_t master_seed() const noexcept { return seed_; }
    std::uint64_t stream_index() const noexcept { return stream_; }
    std::uint64_t counter() const noexcept { return counter_; }

    friend bool operator==(const RngStream& a, const RngStream& b) noexcept
    {
        return a.seed_ == b.seed_ && a.stream_ == b.stream_ && a.counter_ == b.counter_;
    }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t counter_ = 0;
    // Cache of the last block; never affects the output sequence.
    std::uint64_t cached_block_ = ~0ull;
    std::array<std::uint64_t, 2> cache_{};
};

inline RngStream rng_stream(std::uint64_t master_seed, std::uint64_t index) noexcept
{
    return RngStream(master_seed, index);
}

} // namespace loglaw
