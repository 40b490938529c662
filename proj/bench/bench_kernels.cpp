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

#include <benchmark/benchmark.h>

#include "loglaw/core/system_model.hpp"
#include "loglaw/core/target.hpp"
#include "loglaw/estimators/correlation.hpp"
#include "loglaw/estimators/cylinder.hpp"
#include "loglaw/estimators/hitting.hpp"
#include "loglaw/hyperbolic/unit_tangent.hpp"

using namespace loglaw;
using namespace loglaw::estimators;

namespace {

const SystemModel& bolza()
{
    static const SystemModel m = SystemModel::geodesic(hyperbolic::DomainVariant::bolza);
    return m;
}

const TargetFamily& bolza_target()
{
    static const TargetFamily t =
        TargetFamily::base_ball(bolza(), hyperbolic::UnitTangent::from_point({0.0, 1.0}, 0.0), 1.0);
    return t;
}

const RadiusSchedule kSchedule = RadiusSchedule::geometric(0.25, 0.5, 4);

// Argument 0 selects the serial reference; any other value is the OpenMP worker count.
void BM_HittingEnsemble(benchmark::State& state)
{
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto recs = workers == 0
                        ? hitting_ensemble_serial(bolza(), bolza_target(), kSchedule, TMaxRule{}, 1, 0, 64)
                        : hitting_ensemble(bolza(), bolza_target(), kSchedule, TMaxRule{}, 1, 0, 64, workers);
        benchmark::DoNotOptimize(recs.data());
    }
    state.SetItemsProcessed(state.iterations() * 64);
}

void BM_CylinderGrid(benchmark::State& state)
{
    const int workers = static_cast<int>(state.range(0));
    const std::vector<double> eps = {0.1, 0.2};
    const std::vector<double> l = {0.2, 0.1, 0.05};
    const std::uint64_t n = 50000;
    for (auto _ : state) {
        auto est = workers == 0 ? cylinder_grid_serial(bolza(), bolza_target(), eps, l, n, rng_stream(2, 0))
                                : cylinder_grid(bolza(), bolza_target(), eps, l, n, rng_stream(2, 0), workers);
        benchmark::DoNotOptimize(est.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_CorrelationCurve(benchmark::State& state)
{
    const int workers = static_cast<int>(state.range(0));
    const auto cat = SystemModel::cat_map();
    const auto f = cone_observable({0.3, 0.6}, 0.3);
    const std::vector<double> grid = {0, 1, 2, 3, 4, 5, 6, 7};
    const std::uint64_t n = 200000;
    for (auto _ : state) {
        auto c = workers == 0 ? correlation_curve_serial(cat, f, f, grid, n, rng_stream(3, 0))
                              : correlation_curve(cat, f, f, grid, n, rng_stream(3, 0), workers);
        benchmark::DoNotOptimize(c.c.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

} // namespace

BENCHMARK(BM_HittingEnsemble)->ArgName("workers")->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CylinderGrid)->ArgName("workers")->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorrelationCurve)->ArgName("workers")->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
