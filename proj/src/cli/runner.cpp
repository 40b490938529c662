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

#include "loglaw/cli/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "loglaw/cli/catalogue.hpp"
#include "loglaw/core/error.hpp"
#include "loglaw/core/parallel.hpp"
#include "loglaw/estimators/correlation.hpp"
#include "loglaw/estimators/cylinder.hpp"
#include "loglaw/estimators/excursion.hpp"
#include "loglaw/estimators/hitting.hpp"
#include "loglaw/estimators/section.hpp"

#ifndef LOGLAW_VERSION
#define LOGLAW_VERSION "unknown"
#endif

namespace loglaw::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kTrajectoryBlock = 32;

json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_number(v);
}

json numbers(const std::vector<double>& v)
{
    json a = json::array();
    for (double x : v)
        a.push_back(number(x));
    return a;
}

/// Comma-separated writer that only ever hands complete rows to the file.
class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::string& header) : out_(path, std::ios::binary | std::ios::trunc)
    {
        if (!out_)
            throw ConfigError("output_dir", "cannot write '" + path.string() + "'");
        out_ << header << '\n';
        out_.flush();
    }

    CsvWriter& field(double v)
    {
        sep();
        buffer_ += format_number(v);
        return *this;
    }
    CsvWriter& field(std::uint64_t v)
    {
        sep();
        char tmp[24];
        auto r = std::to_chars(tmp, tmp + sizeof tmp, v);
        buffer_.append(tmp, r.ptr);
        return *this;
    }
    CsvWriter& field(long v) { return field(static_cast<std::uint64_t>(std::max(0L, v))); }
    CsvWriter& field(bool v) { return field(static_cast<std::uint64_t>(v ? 1 : 0)); }
    CsvWriter& field(const std::string& v)
    {
        sep();
        buffer_ += v;
        return *this;
    }
    void end_row()
    {
        buffer_ += '\n';
        fresh_ = true;
        ++rows_;
    }
    void flush()
    {
        out_ << buffer_;
        out_.flush();
        buffer_.clear();
    }
    std::size_t rows() const noexcept { return rows_; }

private:
    void sep()
    {
        if (!fresh_)
            buffer_ += ',';
        fresh_ = false;
    }

    std::ofstream out_;
    std::string buffer_;
    bool fresh_ = true;
    std::size_t rows_ = 0;
};

void progress(const RunOptions& opt, const std::string& name, std::uint64_t done, std::uint64_t total,
              const char* unit)
{
    if (opt.progress)
        std::cerr << "[" << name << "] " << done << "/" << total << " " << unit << "\n";
}

json fit_json(const estimators::ExponentFit& fit)
{
    json radii = json::array();
    for (const auto& r : fit.radii)
        radii.push_back({{"l", r.l},
                         {"samples", r.samples},
                         {"censored", r.censored},
                         {"median_log_tau", number(r.median_log_tau)},
                         {"used", r.used}});
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"stderr_slope", fit.stderr_slope},
            {"r_squared", fit.r_squared},
            {"radii", radii}};
}

json line_json(const estimators::LineFit& fit)
{
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"stderr_slope", fit.stderr_slope},
            {"r_squared", fit.r_squared},
            {"points", fit.points}};
}

double budget_exponent(const ExperimentConfig& cfg, const SystemModel& model)
{
    if (cfg.t_max && cfg.t_max->d)
        return *cfg.t_max->d;
    if (auto d = expected_exponent(cfg.system.name, cfg.target.kind))
        return *d;
    return static_cast<double>(model.dimension());
}

estimators::TMaxRule budget(const ExperimentConfig& cfg, const SystemModel& model)
{
    estimators::TMaxRule rule;
    if (cfg.t_max)
        rule.factor = cfg.t_max->factor;
    rule.d_expected = budget_exponent(cfg, model);
    return rule;
}

estimators::RadiusSchedule schedule_of(const ExperimentConfig& cfg)
{
    try {
        return estimators::RadiusSchedule(cfg.target.radii);
    } catch (const InvalidArgument& e) {
        throw ConfigError("target.radii", e.what());
    }
}

double largest(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double min_cache_radius(const ExperimentConfig& cfg)
{
    const double r = largest(cfg.target.radii);
    if (cfg.experiment == ExperimentKind::cylinder_dimension)
        return largest(cfg.epsilons) + r + 0.05;
    return r + 0.5;
}

std::size_t toral_dimension(const SystemModel& model)
{
    if (const auto* s = std::get_if<systems::SuspensionSpec>(&model.spec()))
        return s->base.variant == systems::TorusMapVariant::cat ? 2 : 1;
    return static_cast<std::size_t>(model.dimension());
}

estimators::Observable observable_of(const ExperimentConfig& cfg, const SystemModel& model)
{
    if (model.domain())
        throw ConfigError("observable", "correlation observables are defined on toral systems only");
    try {
        if (cfg.observable.kind == "cosine")
            return estimators::cosine_observable(cfg.observable.axis);
        if (cfg.observable.kind == "cone") {
            auto c = cfg.observable.center;
            if (c.empty())
                c.assign(toral_dimension(model), 0.3);
            if (c.size() != toral_dimension(model))
                throw ConfigError("observable.center", "dimension does not match the system");
            return estimators::cone_observable(c, cfg.observable.height);
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError("observable", e.what());
    }
    throw ConfigError("observable.kind", "unknown observable '" + cfg.observable.kind + "'");
}

std::vector<double> t_grid_or(const ExperimentConfig& cfg, std::vector<double> dflt)
{
    return cfg.t_grid.empty() ? dflt : cfg.t_grid;
}

struct Context {
    const ExperimentConfig& cfg;
    const RunOptions& opt;
    std::uint64_t seed;
    int workers;
    fs::path records;
    fs::path plot;
    json summary = json::object();
    std::vector<std::string> warnings;
};

void write_plot(const fs::path& path, const std::vector<std::tuple<std::string, double, double>>& rows)
{
    CsvWriter w(path, "series,x,y");
    for (const auto& [series, x, y] : rows)
        if (std::isfinite(x) && std::isfinite(y))
            w.field(series).field(x).field(y).end_row();
    w.flush();
}

void run_hitting(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    const estimators::RadiusSchedule schedule = schedule_of(cfg);
    const TargetFamily target = make_target(model, cfg.target, min_cache_radius(cfg));
    const estimators::TMaxRule rule = budget(cfg, model);
    if (cfg.ensemble < 30)
        throw ConfigError("ensemble", "hitting-exponent needs an ensemble of at least 30");

    CsvWriter w(ctx.records, "trajectory_id,l,tau,censored");
    std::vector<estimators::HitRecord> all;
    for (std::uint64_t first = 0; first < cfg.ensemble; first += kTrajectoryBlock) {
        const std::uint64_t count = std::min(kTrajectoryBlock, cfg.ensemble - first);
        auto block = estimators::hitting_ensemble(model, target, schedule, rule, ctx.seed, first, count, ctx.workers);
        for (const auto& r : block)
            w.field(r.trajectory_id).field(r.l).field(r.tau).field(r.censored).end_row();
        w.flush();
        all.insert(all.end(), block.begin(), block.end());
        progress(ctx.opt, cfg.name, first + count, cfg.ensemble, "trajectories");
    }

    json budget_json = {{"factor", rule.factor}, {"d_expected", rule.d_expected}};
    ctx.summary["t_max_rule"] = budget_json;
    ctx.summary["max_log_ratio"] = numbers(estimators::max_log_ratio(all, schedule));
    if (auto e = expected_exponent(cfg.system.name, cfg.target.kind))
        ctx.summary["expected_exponent"] = *e;

    std::vector<std::tuple<std::string, double, double>> plot;
    const auto fit = estimators::fit_hitting_exponent(all, schedule);
    for (const auto& r : fit.radii)
        plot.emplace_back(r.used ? "median_log_tau" : "median_log_tau_dropped", -std::log(r.l), r.median_log_tau);
    for (const auto& r : fit.radii)
        plot.emplace_back("fit", -std::log(r.l), fit.intercept - fit.slope * std::log(r.l));
    write_plot(ctx.plot, plot);
    ctx.summary["fit"] = fit_json(fit);
    ctx.warnings.insert(ctx.warnings.end(), fit.warnings.begin(), fit.warnings.end());
}

void run_cylinder(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    const estimators::RadiusSchedule schedule = schedule_of(cfg);
    if (cfg.epsilons.empty())
        throw ConfigError("epsilons", "cylinder-dimension needs an eps grid");
    const TargetFamily target = make_target(model, cfg.target, min_cache_radius(cfg));

    std::vector<estimators::CylinderEstimate> est;
    try {
        est = estimators::cylinder_grid(model, target, cfg.epsilons, schedule.values(), cfg.samples,
                                        rng_stream(ctx.seed, 0), ctx.workers);
    } catch (const InvalidArgument& e) {
        throw ConfigError("epsilons", e.what());
    }
    CsvWriter w(ctx.records, "epsilon,l,mu_hat,stderr,n");
    std::vector<std::tuple<std::string, double, double>> plot;
    json table = json::array();
    for (const auto& e : est) {
        w.field(e.epsilon).field(e.l).field(e.mu_hat).field(e.stderr_mu).field(e.n).end_row();
        table.push_back({{"epsilon", e.epsilon}, {"l", e.l}, {"mu_hat", e.mu_hat}, {"stderr", e.stderr_mu}, {"n", e.n}});
        if (e.mu_hat > 0.0)
            plot.emplace_back("eps=" + format_number(e.epsilon), std::log(e.l), std::log(e.mu_hat));
    }
    w.flush();
    write_plot(ctx.plot, plot);
    ctx.summary["estimates"] = table;
    if (auto d = expected_exponent(cfg.system.name, cfg.target.kind))
        ctx.summary["expected_dimension"] = *d;

    const auto dim = estimators::conditional_dimension_from(est);
    json per = json::array();
    for (const auto& s : dim.per_epsilon) {
        json row = {{"epsilon", s.epsilon}, {"fitted", s.fitted}, {"dropped_l", numbers(s.dropped_l)}};
        if (s.fitted)
            row["fit"] = line_json(s.fit);
        per.push_back(row);
    }
    ctx.summary["d"] = dim.d;
    ctx.summary["stability_gap"] = dim.stability_gap;
    ctx.summary["per_epsilon"] = per;
    ctx.warnings.insert(ctx.warnings.end(), dim.warnings.begin(), dim.warnings.end());
}

void run_correlation(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    const auto obs = observable_of(cfg, model);
    const auto grid = t_grid_or(cfg, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    estimators::CorrelationCurve curve;
    try {
        curve = estimators::correlation_curve(model, obs, obs, grid, cfg.samples, rng_stream(ctx.seed, 0), ctx.workers);
    } catch (const InvalidArgument& e) {
        throw ConfigError("t_grid", e.what());
    }
    CsvWriter w(ctx.records, "t,c,stderr");
    std::vector<std::tuple<std::string, double, double>> plot;
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        w.field(curve.t[i]).field(curve.c[i]).field(curve.stderr_c[i]).end_row();
        plot.emplace_back("c", curve.t[i], curve.c[i]);
        if (curve.c[i] != 0.0)
            plot.emplace_back("log_abs_c", curve.t[i], std::log(std::abs(curve.c[i])));
    }
    w.flush();
    write_plot(ctx.plot, plot);
    ctx.summary["observable"] = obs.name;
    ctx.summary["classification"] = estimators::to_string(curve.classification);
    ctx.summary["rate"] = curve.rate;
    ctx.summary["noise_floor"] = curve.noise_floor;
    ctx.summary["supra_noise_points"] = curve.supra_noise_points;
    if (curve.exponential_fitted)
        ctx.summary["exponential_fit"] = line_json(curve.exponential_fit);
    if (curve.polynomial_fitted)
        ctx.summary["polynomial_fit"] = line_json(curve.polynomial_fit);
    ctx.summary["t"] = numbers(curve.t);
    ctx.summary["c"] = numbers(curve.c);
    ctx.summary["stderr"] = numbers(curve.stderr_c);
    if (curve.classification == estimators::DecayClass::inconclusive)
        ctx.warnings.push_back("fewer than 4 correlation values above the noise floor");
}

void run_section(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    const auto* spec = std::get_if<systems::SuspensionSpec>(&model.spec());
    if (!spec)
        throw ConfigError("system.name", "section-check needs a suspension system");
    if (cfg.target.kind != "base-ball")
        throw ConfigError("target.kind", "section-check uses base-ball targets");
    const estimators::RadiusSchedule schedule = schedule_of(cfg);
    const TargetFamily target = make_target(model, cfg.target);
    const estimators::TMaxRule rule = budget(cfg, model);

    CsvWriter w(ctx.records, "trajectory_id,r,tau_flow,tau_section,sum_roof,residual,censored");
    std::vector<estimators::SectionRecord> all;
    for (std::uint64_t first = 0; first < cfg.ensemble; first += kTrajectoryBlock) {
        const std::uint64_t count = std::min(kTrajectoryBlock, cfg.ensemble - first);
        auto block = estimators::section_trajectories(*spec, target, schedule, rule, ctx.seed, first, count,
                                                      ctx.workers);
        for (const auto& r : block)
            w.field(r.trajectory_id)
                .field(r.r)
                .field(r.tau_flow)
                .field(r.tau_section)
                .field(r.sum_roof)
                .field(r.residual)
                .field(r.censored)
                .end_row();
        w.flush();
        all.insert(all.end(), block.begin(), block.end());
        progress(ctx.opt, cfg.name, first + count, cfg.ensemble, "trajectories");
    }
    const auto rep = estimators::section_report(*spec, all, schedule, ctx.seed);
    std::vector<std::tuple<std::string, double, double>> plot;
    for (const auto& r : rep.flow_fit.radii)
        plot.emplace_back("flow", -std::log(r.l), r.median_log_tau);
    for (const auto& r : rep.section_fit.radii)
        plot.emplace_back("section", -std::log(r.l), r.median_log_tau);
    write_plot(ctx.plot, plot);
    ctx.summary["mean_return"] = rep.mean_return;
    ctx.summary["mean_return_stderr"] = rep.mean_return_stderr;
    ctx.summary["mean_return_quadrature"] = rep.mean_return_quadrature;
    ctx.summary["max_abs_residual"] = rep.max_abs_residual;
    ctx.summary["flow_fit"] = fit_json(rep.flow_fit);
    ctx.summary["section_fit"] = fit_json(rep.section_fit);
    ctx.summary["slope_difference"] = rep.flow_fit.slope - rep.section_fit.slope;
    ctx.summary["median_ratio"] = numbers(rep.median_ratio);
    for (const auto* f : {&rep.flow_fit, &rep.section_fit})
        ctx.warnings.insert(ctx.warnings.end(), f->warnings.begin(), f->warnings.end());
}

void run_excursion(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    if (!model.domain())
        throw ConfigError("system.name", "excursion needs a hyperbolic system");
    if (cfg.target.kind != "base-ball")
        throw ConfigError("target.kind", "excursion measures base distance to the target center");
    const TargetFamily target = make_target(model, cfg.target);
    const auto grid = t_grid_or(cfg, estimators::geometric_grid(10.0, 1.0e6, 11));

    CsvWriter w(ctx.records, "trajectory_id,t,d_t,ratio");
    std::vector<std::vector<double>> ratios(grid.size());
    std::vector<double> final_ratio, slopes;
    for (std::uint64_t first = 0; first < cfg.ensemble; first += kTrajectoryBlock) {
        const std::uint64_t count = std::min(kTrajectoryBlock, cfg.ensemble - first);
        const auto block = estimators::excursion_ensemble(*model.domain(), *target.cache(), grid, ctx.seed, first,
                                                          count, ctx.workers);
        for (const auto& c : block.curves) {
            for (std::size_t i = 0; i < c.t.size(); ++i) {
                w.field(c.trajectory_id).field(c.t[i]).field(c.d_t[i]).field(c.ratio[i]).end_row();
                ratios[i].push_back(c.ratio[i]);
            }
            final_ratio.push_back(c.ratio.back());
            if (c.exponent_fitted)
                slopes.push_back(c.exponent.slope);
        }
        w.flush();
        progress(ctx.opt, cfg.name, first + count, cfg.ensemble, "trajectories");
    }
    std::vector<std::tuple<std::string, double, double>> plot;
    std::vector<double> medians;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double m = ratios[i].empty() ? std::nan("") : estimators::median(ratios[i]);
        medians.push_back(m);
        plot.emplace_back("median_ratio", std::log(grid[i]), m);
    }
    write_plot(ctx.plot, plot);
    const auto inside = std::count_if(final_ratio.begin(), final_ratio.end(),
                                      [](double r) { return r >= 0.8 && r <= 1.2; });
    ctx.summary["t"] = numbers(grid);
    ctx.summary["median_ratio"] = numbers(medians);
    ctx.summary["fraction_final_in_0.8_1.2"] =
        final_ratio.empty() ? 0.0 : static_cast<double>(inside) / static_cast<double>(final_ratio.size());
    ctx.summary["median_final_ratio"] = final_ratio.empty() ? json(nullptr) : number(estimators::median(final_ratio));
    ctx.summary["median_exponent_slope"] = slopes.empty() ? json(nullptr) : number(estimators::median(slopes));
    ctx.summary["expected"] = 1.0;
}

void run_cusp(Context& ctx)
{
    const auto& cfg = ctx.cfg;
    const SystemModel model = make_system(cfg.system);
    if (!model.domain() || model.domain()->variant() != hyperbolic::DomainVariant::modular)
        throw ConfigError("system.name", "cusp-excursion needs the modular surface");
    if (!(cfg.step > 0.0))
        throw ConfigError("step", "must be positive");
    const auto grid = t_grid_or(cfg, estimators::geometric_grid(10.0, 1.0e5, 9));

    CsvWriter w(ctx.records, "trajectory_id,t,max_dist,statistic");
    std::vector<std::vector<double>> stats(grid.size());
    std::vector<double> final_stat;
    for (std::uint64_t first = 0; first < cfg.ensemble; first += kTrajectoryBlock) {
        const std::uint64_t count = std::min(kTrajectoryBlock, cfg.ensemble - first);
        const auto block = estimators::cusp_ensemble(*model.domain(), grid, ctx.seed, first, count, ctx.workers,
                                                     cfg.step);
        for (const auto& c : block) {
            for (std::size_t i = 0; i < c.t.size(); ++i) {
                w.field(c.trajectory_id).field(c.t[i]).field(c.max_dist[i]).field(c.statistic[i]).end_row();
                stats[i].push_back(c.statistic[i]);
            }
            final_stat.push_back(c.statistic.back());
        }
        w.flush();
        progress(ctx.opt, cfg.name, first + count, cfg.ensemble, "trajectories");
    }
    std::vector<std::tuple<std::string, double, double>> plot;
    std::vector<double> medians;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double m = stats[i].empty() ? std::nan("") : estimators::median(stats[i]);
        medians.push_back(m);
        plot.emplace_back("median_statistic", std::log(grid[i]), m);
    }
    write_plot(ctx.plot, plot);
    ctx.summary["t"] = numbers(grid);
    ctx.summary["median_statistic"] = numbers(medians);
    ctx.summary["median_final_statistic"] =
        final_stat.empty() ? json(nullptr) : number(estimators::median(final_stat));
    ctx.summary["expected"] = 1.0;
    ctx.warnings.push_back("heuristic experiment: the lim sup converges slowly");
}

} // namespace

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

int exit_code_for(const std::exception_ptr& error)
{
    try {
        std::rethrow_exception(error);
    } catch (const ConfigError&) {
        return exit_config;
    } catch (const InvalidArgument&) {
        return exit_config;
    } catch (const SamplingFailure&) {
        return exit_sampling;
    } catch (const InsufficientData&) {
        return exit_insufficient_data;
    } catch (const ReductionFailure&) {
        return exit_numeric;
    } catch (const NumericDomainError&) {
        return exit_numeric;
    } catch (...) {
        return exit_failure;
    }
}

int effective_workers(const ExperimentConfig& cfg, const RunOptions& opt)
{
    if (opt.workers && *opt.workers > 0)
        return *opt.workers;
    if (std::getenv("LOGLAW_WORKERS") == nullptr && cfg.workers > 0)
        return cfg.workers;
    return parallel::default_workers();
}

void validate_experiment(const ExperimentConfig& cfg)
{
    const SystemModel model = make_system(cfg.system);
    switch (cfg.experiment) {
    case ExperimentKind::hitting_exponent:
    case ExperimentKind::section_check:
        schedule_of(cfg);
        if (cfg.ensemble < 30)
            throw ConfigError("ensemble", "needs at least 30 trajectories");
        if (cfg.experiment == ExperimentKind::section_check &&
            !std::holds_alternative<systems::SuspensionSpec>(model.spec()))
            throw ConfigError("system.name", "section-check needs a suspension system");
        make_target(model, cfg.target, min_cache_radius(cfg));
        break;
    case ExperimentKind::cylinder_dimension:
        schedule_of(cfg);
        if (cfg.epsilons.empty())
            throw ConfigError("epsilons", "cylinder-dimension needs an eps grid");
        if (cfg.target.radii.size() < 3)
            throw ConfigError("target.radii", "cylinder-dimension needs at least 3 radii");
        make_target(model, cfg.target, min_cache_radius(cfg));
        break;
    case ExperimentKind::correlation:
        observable_of(cfg, model);
        break;
    case ExperimentKind::excursion:
        if (!model.domain())
            throw ConfigError("system.name", "excursion needs a hyperbolic system");
        make_target(model, cfg.target);
        break;
    case ExperimentKind::cusp_excursion:
        if (!model.domain() || model.domain()->variant() != hyperbolic::DomainVariant::modular)
            throw ConfigError("system.name", "cusp-excursion needs the modular surface");
        break;
    }
}

RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    RunResult res;
    res.name = cfg.name;
    const fs::path dir = opt.out_dir.value_or(cfg.output_dir);
    res.records = dir / (cfg.name + ".records.csv");
    res.summary = dir / (cfg.name + ".summary.json");
    res.plot = dir / (cfg.name + ".plot.csv");

    Context ctx{cfg, opt, opt.seed.value_or(cfg.seed), effective_workers(cfg, opt), res.records, res.plot, json::object(), {}};
    json manifest = {{"name", cfg.name},
                     {"experiment", to_string(cfg.experiment)},
                     {"config", cfg.echo},
                     {"seed", ctx.seed},
                     {"workers", ctx.workers},
                     {"version", LOGLAW_VERSION},
                     {"files",
                      {{"records", res.records.filename().string()},
                       {"summary", res.summary.filename().string()},
                       {"plot", res.plot.filename().string()}}}};
    try {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw ConfigError("output_dir", "cannot create '" + dir.string() + "': " + ec.message());
        switch (cfg.experiment) {
        case ExperimentKind::hitting_exponent: run_hitting(ctx); break;
        case ExperimentKind::cylinder_dimension: run_cylinder(ctx); break;
        case ExperimentKind::correlation: run_correlation(ctx); break;
        case ExperimentKind::section_check: run_section(ctx); break;
        case ExperimentKind::excursion: run_excursion(ctx); break;
        case ExperimentKind::cusp_excursion: run_cusp(ctx); break;
        }
        manifest["status"] = "ok";
    } catch (...) {
        const auto err = std::current_exception();
        res.exit_code = exit_code_for(err);
        try {
            std::rethrow_exception(err);
        } catch (const std::exception& e) {
            res.message = e.what();
        } catch (...) {
            res.message = "unknown error";
        }
        manifest["status"] = "error";
        manifest["error"] = {{"exit_code", res.exit_code}, {"message", res.message}};
    }
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    manifest["wall_time_seconds"] = wall.count();
    manifest["summary"] = ctx.summary;
    manifest["warnings"] = ctx.warnings;
    res.manifest = manifest;

    std::error_code ec;
    if (fs::is_directory(dir, ec)) {
        std::ofstream out(res.summary, std::ios::binary | std::ios::trunc);
        out << manifest.dump(2) << '\n';
    }
    return res;
}

} // namespace loglaw::cli
