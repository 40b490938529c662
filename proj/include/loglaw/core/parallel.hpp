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
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace loglaw::parallel {

/// Worker count from LOGLAW_WORKERS, else the available hardware parallelism.
int default_workers();

/// requested <= 0 selects default_workers().
int resolve_workers(int requested);

/*!
 * Serial reference kernel: out[i] = fn(i) for i in [0, n).
 *
 * Every parallel kernel below must produce exactly this vector; the tests
 * compare them element by element.
 */
template <class Fn>
auto map_indexed_serial(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    std::vector<std::invoke_result_t<Fn&, std::size_t>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(fn(i));
    return out;
}

/*!
 * OpenMP kernel: out[i] = fn(i), work-shared dynamically over indices.
 *
 * Results land in their index slot, so the output is independent of the
 * worker count and of scheduling. If any call throws, the exception of the
 * lowest failing index is rethrown after the loop.
 */
template <class Fn>
auto map_indexed(std::size_t n, int workers, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using T = std::invoke_result_t<Fn&, std::size_t>;
    const int threads = resolve_workers(workers);
    if (threads <= 1 || n <= 1)
        return map_indexed_serial(n, fn);

    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace loglaw::parallel
