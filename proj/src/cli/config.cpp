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

#include "loglaw/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "loglaw/core/error.hpp"

namespace loglaw::cli {

namespace {

const std::vector<std::pair<ExperimentKind, std::string>> kExperimentNames = {
    {ExperimentKind::hitting_exponent, "hitting-exponent"},
    {ExperimentKind::cylinder_dimension, "cylinder-dimension"},
    {ExperimentKind::correlation, "correlation"},
    {ExperimentKind::section_check, "section-check"},
    {ExperimentKind::excursion, "excursion"},
    {ExperimentKind::cusp_excursion, "cusp-excursion"},
};

void check_keys(const YAML::Node& node, const std::string& path, const std::set<std::string>& allowed)
{
    if (!node.IsMap())
        throw ConfigError(path, "expected a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key))
            throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
    }
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

template <class T>
T scalar(const YAML::Node& node, const std::string& path)
{
    if (!node.IsScalar())
        throw ConfigError(path, "expected a scalar value");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(path, "cannot read value '" + node.Scalar() + "'");
    }
}

double finite(const YAML::Node& node, const std::string& path)
{
    const double v = scalar<double>(node, path);
    if (!std::isfinite(v))
        throw ConfigError(path, "value must be finite");
    return v;
}

std::uint64_t count_value(const YAML::Node& node, const std::string& path)
{
    const double v = finite(node, path);
    if (v < 0.0 || v != std::floor(v) || v > 9.0e15)
        throw ConfigError(path, "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> number_list(const YAML::Node& node, const std::string& path)
{
    if (!node.IsSequence())
        throw ConfigError(path, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(finite(node[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

/// A list, or {start, stop, count, spacing} with spacing linear or geometric.
std::vector<double> grid(const YAML::Node& node, const std::string& path)
{
    if (node.IsSequence())
        return number_list(node, path);
    check_keys(node, path, {"start", "stop", "count", "spacing", "ratio"});
    if (node["ratio"]) {
        if (!node["start"] || !node["count"])
            throw ConfigError(path, "a ratio grid needs start, ratio and count");
        const double start = finite(node["start"], join(path, "start"));
        const double ratio = finite(node["ratio"], join(path, "ratio"));
        const std::uint64_t n = count_value(node["count"], join(path, "count"));
        std::vector<double> out;
        double v = start;
        for (std::uint64_t i = 0; i < n; ++i, v *= ratio)
            out.push_back(v);
        return out;
    }
    for (const char* k : {"start", "stop", "count"})
        if (!node[k])
            throw ConfigError(join(path, k), "missing");
    const double start = finite(node["start"], join(path, "start"));
    const double stop = finite(node["stop"], join(path, "stop"));
    const std::uint64_t n = count_value(node["count"], join(path, "count"));
    const std::string spacing = node["spacing"] ? scalar<std::string>(node["spacing"], join(path, "spacing")) : "linear";
    if (n < 2)
        throw ConfigError(join(path, "count"), "a grid needs at least two points");
    std::vector<double> out(n);
    if (spacing == "linear") {
        for (std::uint64_t i = 0; i < n; ++i)
            out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
    } else if (spacing == "geometric") {
        if (!(start > 0.0) || !(stop > 0.0))
            throw ConfigError(path, "geometric grids need positive endpoints");
        const double step = std::log(stop / start) / static_cast<double>(n - 1);
        for (std::uint64_t i = 0; i < n; ++i)
            out[i] = start * std::exp(step * static_cast<double>(i));
    } else {
        throw ConfigError(join(path, "spacing"), "expected linear or geometric");
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

nlohmann::json to_json(const YAML::Node& node)
{
    switch (node.Type()) {
    case YAML::NodeType::Sequence: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& item : node)
            arr.push_back(to_json(item));
        return arr;
    }
    case YAML::NodeType::Map: {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& kv : node)
            obj[kv.first.as<std::string>()] = to_json(kv.second);
        return obj;
    }
    case YAML::NodeType::Scalar: {
        const std::string s = node.Scalar();
        if (node.Tag() != "!") {
            std::int64_t i = 0;
            if (YAML::convert<std::int64_t>::decode(node, i))
                return i;
            double d = 0.0;
            if (YAML::convert<double>::decode(node, d))
                return d;
            bool b = false;
            if (YAML::convert<bool>::decode(node, b))
                return b;
        }
        return s;
    }
    default:
        return nullptr;
    }
}

ExperimentConfig parse_experiment(const YAML::Node& node, const std::string& path)
{
    check_keys(node, path,
               {"name", "experiment", "system", "target", "ensemble", "seed", "t_max", "output_dir", "workers",
                "epsilons", "samples", "t_grid", "observable", "step"});
    ExperimentConfig cfg;
    cfg.echo = to_json(node);

    if (!node["name"])
        throw ConfigError(join(path, "name"), "missing");
    cfg.name = scalar<std::string>(node["name"], join(path, "name"));
    if (cfg.name.empty() || cfg.name.find_first_of("/\\ ") != std::string::npos)
        throw ConfigError(join(path, "name"), "must be non-empty without spaces or path separators");

    if (!node["experiment"])
        throw ConfigError(join(path, "experiment"), "missing");
    const auto kind_name = scalar<std::string>(node["experiment"], join(path, "experiment"));
    const auto kind = parse_experiment_kind(kind_name);
    if (!kind)
        throw ConfigError(join(path, "experiment"), "unknown experiment '" + kind_name + "'");
    cfg.experiment = *kind;

    const std::string sys_path = join(path, "system");
    const YAML::Node sys = node["system"];
    if (!sys)
        throw ConfigError(sys_path, "missing");
    if (sys.IsScalar()) {
        cfg.system.name = scalar<std::string>(sys, sys_path);
    } else {
        check_keys(sys, sys_path, {"name", "parameters"});
        if (!sys["name"])
            throw ConfigError(join(sys_path, "name"), "missing");
        cfg.system.name = scalar<std::string>(sys["name"], join(sys_path, "name"));
        if (sys["parameters"]) {
            const std::string pp = join(sys_path, "parameters");
            if (!sys["parameters"].IsMap())
                throw ConfigError(pp, "expected a mapping");
            for (const auto& kv : sys["parameters"]) {
                const auto key = kv.first.as<std::string>();
                cfg.system.parameters[key] = finite(kv.second, join(pp, key));
            }
        }
    }

    if (const YAML::Node t = node["target"]) {
        const std::string tp = join(path, "target");
        check_keys(t, tp, {"kind", "center", "radii", "cache_radius", "axis"});
        if (t["kind"])
            cfg.target.kind = scalar<std::string>(t["kind"], join(tp, "kind"));
        if (t["center"])
            cfg.target.center = number_list(t["center"], join(tp, "center"));
        if (t["radii"])
            cfg.target.radii = grid(t["radii"], join(tp, "radii"));
        if (t["cache_radius"])
            cfg.target.cache_radius = finite(t["cache_radius"], join(tp, "cache_radius"));
        if (t["axis"])
            cfg.target.axis = scalar<int>(t["axis"], join(tp, "axis"));
    }

    if (node["ensemble"])
        cfg.ensemble = count_value(node["ensemble"], join(path, "ensemble"));
    if (node["seed"])
        cfg.seed = scalar<std::uint64_t>(node["seed"], join(path, "seed"));
    if (const YAML::Node tm = node["t_max"]) {
        const std::string tp = join(path, "t_max");
        TMaxOverride o;
        if (tm.IsScalar()) {
            o.factor = finite(tm, tp);
            o.d = 0.0;
        } else {
            check_keys(tm, tp, {"factor", "d"});
            if (tm["factor"])
                o.factor = finite(tm["factor"], join(tp, "factor"));
            if (tm["d"])
                o.d = finite(tm["d"], join(tp, "d"));
        }
        if (!(o.factor > 0.0))
            throw ConfigError(tp, "budget factor must be positive");
        cfg.t_max = o;
    }
    if (node["output_dir"])
        cfg.output_dir = scalar<std::string>(node["output_dir"], join(path, "output_dir"));
    if (node["workers"]) {
        cfg.workers = scalar<int>(node["workers"], join(path, "workers"));
        if (cfg.workers < 0)
            throw ConfigError(join(path, "workers"), "must be non-negative");
    }
    if (node["epsilons"])
        cfg.epsilons = grid(node["epsilons"], join(path, "epsilons"));
    if (node["samples"])
        cfg.samples = count_value(node["samples"], join(path, "samples"));
    if (node["t_grid"])
        cfg.t_grid = grid(node["t_grid"], join(path, "t_grid"));
    if (node["step"])
        cfg.step = finite(node["step"], join(path, "step"));
    if (const YAML::Node o = node["observable"]) {
        const std::string op = join(path, "observable");
        check_keys(o, op, {"kind", "center", "height", "axis"});
        if (o["kind"])
            cfg.observable.kind = scalar<std::string>(o["kind"], join(op, "kind"));
        if (o["center"])
            cfg.observable.center = number_list(o["center"], join(op, "center"));
        if (o["height"])
            cfg.observable.height = finite(o["height"], join(op, "height"));
        if (o["axis"])
            cfg.observable.axis = scalar<int>(o["axis"], join(op, "axis"));
    }
    return cfg;
}

} // namespace

std::string to_string(ExperimentKind kind)
{
    for (const auto& [k, name] : kExperimentNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(const std::string& name)
{
    for (const auto& [k, n] : kExperimentNames)
        if (n == name)
            return k;
    return std::nullopt;
}

std::vector<ExperimentConfig> parse_config_text(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError("<document>", std::string("YAML parse error: ") + e.what());
    }
    if (!root || root.IsNull())
        throw ConfigError("<document>", "empty configuration");
    std::vector<ExperimentConfig> out;
    if (root.IsMap() && root["experiments"]) {
        check_keys(root, "", {"experiments"});
        const YAML::Node list = root["experiments"];
        if (!list.IsSequence() || list.size() == 0)
            throw ConfigError("experiments", "expected a non-empty list");
        for (std::size_t i = 0; i < list.size(); ++i)
            out.push_back(parse_experiment(list[i], "experiments[" + std::to_string(i) + "]"));
    } else {
        out.push_back(parse_experiment(root, ""));
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!names.insert(out[i].name).second)
            throw ConfigError("experiments[" + std::to_string(i) + "].name", "duplicate name '" + out[i].name + "'");
    return out;
}

std::vector<ExperimentConfig> load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace loglaw::cli
