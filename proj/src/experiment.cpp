// Copyright 2026 The qmcmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmcmc/experiment.hpp"

#include "qmcmc/analysis.hpp"
#include "qmcmc/dqw.hpp"
#include "qmcmc/engine.hpp"
#include "qmcmc/purestate.hpp"
#include "qmcmc/target.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qmcmc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::qmcmc:
        return "qmcmc";
    case Mode::dqw:
        return "dqw";
    case Mode::rw:
        return "rw";
    case Mode::mh:
        return "mh";
    case Mode::sweep:
        return "sweep";
    }
    return "unknown";
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

template <class T> T parse_number(const std::string &key, const std::string &text) {
    const std::string v = trim(text);
    T out{};
    if constexpr (std::is_floating_point_v<T>) {
        char *end = nullptr;
        out = std::strtod(v.c_str(), &end);
        if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(out)) {
            throw ConfigError("'" + key + "' expects a finite number, got '" + text + "'");
        }
    } else {
        const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
            throw ConfigError("'" + key + "' expects a nonnegative integer, got '" + text + "'");
        }
    }
    return out;
}

bool parse_bool(const std::string &key, const std::string &text) {
    const std::string v = trim(text);
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
        return false;
    }
    throw ConfigError("'" + key + "' expects true/false, got '" + text + "'");
}

Mode parse_mode(const std::string &key, const std::string &text) {
    const std::string v = trim(text);
    for (Mode m : {Mode::qmcmc, Mode::dqw, Mode::rw, Mode::mh, Mode::sweep}) {
        if (v == to_string(m)) {
            return m;
        }
    }
    throw ConfigError("'" + key + "' expects one of qmcmc|dqw|rw|mh|sweep, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::string canonical_key(const std::string &key) {
    if (key == "nx") {
        return "n_x";
    }
    if (key == "na") {
        return "n_a";
    }
    if (key == "nacc") {
        return "n_acc";
    }
    if (key == "eps") {
        return "epsilon";
    }
    std::string out = key;
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

} // namespace

void apply_setting(ExperimentConfig &cfg, const std::string &raw_key, const std::string &value) {
    const std::string key = canonical_key(trim(raw_key));
    if (key == "mode") {
        cfg.mode = parse_mode(key, value);
    } else if (key == "target") {
        cfg.target = trim(value);
    } else if (key == "x_min") {
        cfg.x_min = parse_number<double>(key, value);
    } else if (key == "x_max") {
        cfg.x_max = parse_number<double>(key, value);
    } else if (key == "range") {
        std::istringstream is(value);
        std::string lo;
        std::string hi;
        std::string extra;
        if (!(is >> lo >> hi) || (is >> extra)) {
            throw ConfigError("'range' expects two numbers 'lo hi', got '" + value + "'");
        }
        cfg.x_min = parse_number<double>(key, lo);
        cfg.x_max = parse_number<double>(key, hi);
    } else if (key == "n_x") {
        cfg.n_x = parse_number<int>(key, value);
    } else if (key == "n_a") {
        cfg.n_a = parse_number<int>(key, value);
    } else if (key == "n_acc") {
        cfg.n_acc = parse_number<int>(key, value);
    } else if (key == "epsilon") {
        cfg.epsilon = parse_number<double>(key, value);
    } else if (key == "max_iters") {
        cfg.max_iters = parse_number<std::size_t>(key, value);
    } else if (key == "store_stride") {
        cfg.store_stride = parse_number<std::size_t>(key, value);
    } else if (key == "oracle_check") {
        cfg.oracle_check = parse_bool(key, value);
    } else if (key == "oracle_iters") {
        cfg.oracle_iters = parse_number<std::size_t>(key, value);
    } else if (key == "k") {
        cfg.k = parse_number<std::size_t>(key, value);
    } else if (key == "gauss") {
        const auto per_side = parse_number<std::size_t>(key, value);
        const ProposalSpec p = ProposalSpec::gauss(per_side);
        cfg.k = p.k;
        cfg.sigma = p.sigma;
    } else if (key == "sigma") {
        cfg.sigma = parse_number<double>(key, value);
    } else if (key == "iters") {
        cfg.iters = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "burn_in_fraction" || key == "burn_in") {
        cfg.burn_in_fraction = parse_number<double>(key, value);
    } else if (key == "thinning") {
        cfg.thinning = parse_number<std::size_t>(key, value);
    } else if (key == "acceptance_mode" || key == "acceptance") {
        const std::string v = trim(value);
        if (v == "metropolis") {
            cfg.acceptance_mode = AcceptanceMode::metropolis;
        } else if (v == "greedy") {
            cfg.acceptance_mode = AcceptanceMode::greedy;
        } else {
            throw ConfigError("'" + key + "' expects metropolis|greedy, got '" + value + "'");
        }
    } else if (key == "theta") {
        cfg.theta = parse_number<double>(key, value);
    } else if (key == "gamma0") {
        cfg.gamma0 = parse_number<double>(key, value);
    } else if (key == "gamma1") {
        cfg.gamma1 = parse_number<double>(key, value);
    } else if (key == "steps") {
        cfg.steps = parse_number<std::size_t>(key, value);
    } else if (key == "init_coin") {
        const std::string v = trim(value);
        if (v != "H" && v != "T") {
            throw ConfigError("'init_coin' expects H or T, got '" + value + "'");
        }
        cfg.init_coin = v[0];
    } else if (key == "p_right") {
        cfg.p_right = parse_number<double>(key, value);
    } else if (key == "sweep_mode") {
        cfg.sweep_mode = parse_mode(key, value);
    } else if (key == "sweep_param" || key == "param") {
        cfg.sweep_param = trim(value);
    } else if (key == "sweep_values" || key == "values") {
        cfg.sweep_values = split_list(value);
    } else if (key == "output_dir" || key == "out") {
        cfg.output_dir = trim(value);
    } else {
        throw ConfigError("unknown key '" + raw_key + "'");
    }
}

void load_config_text(const std::string &text, const std::string &source,
                      ExperimentConfig &cfg) {
    std::istringstream is(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source + ":" + std::to_string(number) +
                              ": expected 'key = value', got '" + line + "'");
        }
        try {
            apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::exception &e) {
            throw ConfigError(source + ":" + std::to_string(number) + ": " + e.what());
        }
    }
}

void load_config_file(const fs::path &path, ExperimentConfig &cfg) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    load_config_text(buf.str(), path.string(), cfg);
}

namespace {

CircuitConfig circuit_of(const ExperimentConfig &cfg) {
    CircuitConfig c;
    c.n_x = cfg.n_x;
    c.n_a = cfg.n_a;
    c.n_acc = cfg.n_acc;
    c.epsilon = cfg.epsilon;
    c.max_iters = cfg.max_iters;
    return c;
}

ProposalSpec proposal_of(const ExperimentConfig &cfg) {
    ProposalSpec p = ProposalSpec::with_default_sigma(cfg.k);
    if (cfg.sigma) {
        p.sigma = *cfg.sigma;
    }
    return p;
}

MhOptions mh_options_of(const ExperimentConfig &cfg) {
    MhOptions o;
    o.iters = cfg.iters;
    o.seed = cfg.seed;
    o.burn_in_fraction = cfg.burn_in_fraction;
    o.thinning = cfg.thinning;
    o.mode = cfg.acceptance_mode;
    return o;
}

bool is_uniform(const std::string &target) { return target == "uniform" || target == "U"; }

/// Grid plus expected distribution for the configured target.
struct ResolvedTarget {
    Grid grid;
    ExpectedDistribution expected;
    std::string description;
};

ResolvedTarget resolve_target(const ExperimentConfig &cfg) {
    Grid grid(cfg.n_x, cfg.x_min, cfg.x_max);
    if (is_uniform(cfg.target)) {
        return {grid, ExpectedDistribution::uniform(grid.size()), "uniform"};
    }
    TargetSpec spec(parse_mixture(cfg.target), grid);
    return {grid, discretize_target(spec), spec.describe()};
}

template <class Fn> void wrap_config_errors(Fn &&fn) {
    try {
        fn();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    } catch (const std::domain_error &e) {
        throw ConfigError(e.what());
    }
}

} // namespace

void validate(const ExperimentConfig &cfg) {
    wrap_config_errors([&] {
        switch (cfg.mode) {
        case Mode::qmcmc:
            circuit_of(cfg).validate();
            (void)resolve_target(cfg);
            if (cfg.oracle_check) {
                const int q = pure_qubit_count(circuit_of(cfg), cfg.oracle_iters);
                if (q > kMaxPureQubits) {
                    throw ConfigError("oracle check needs " + std::to_string(q) +
                                      " live qubits, above the cap of " +
                                      std::to_string(kMaxPureQubits));
                }
            }
            break;
        case Mode::mh:
            proposal_of(cfg).validate();
            mh_options_of(cfg).validate();
            (void)resolve_target(cfg);
            break;
        case Mode::dqw:
            CoinParams{cfg.theta, cfg.gamma0, cfg.gamma1}.validate();
            break;
        case Mode::rw:
            if (!(cfg.p_right >= 0.0 && cfg.p_right <= 1.0)) {
                throw ConfigError("p_right must be in [0, 1]");
            }
            break;
        case Mode::sweep: {
            if (cfg.sweep_mode == Mode::sweep) {
                throw ConfigError("sweep_mode cannot be 'sweep'");
            }
            if (cfg.sweep_param.empty() || cfg.sweep_values.empty()) {
                throw ConfigError("sweep needs --param and a non-empty --values list");
            }
            for (const auto &v : cfg.sweep_values) {
                ExperimentConfig point = cfg;
                point.mode = cfg.sweep_mode;
                apply_setting(point, cfg.sweep_param, v);
                validate(point);
            }
            break;
        }
        }
    });
}

json to_json(const ExperimentConfig &cfg) {
    json j;
    j["mode"] = to_string(cfg.mode);
    switch (cfg.mode == Mode::sweep ? cfg.sweep_mode : cfg.mode) {
    case Mode::qmcmc:
        j["target"] = cfg.target;
        j["x_min"] = cfg.x_min;
        j["x_max"] = cfg.x_max;
        j["n_x"] = cfg.n_x;
        j["n_a"] = cfg.n_a;
        j["n_acc"] = cfg.n_acc;
        j["epsilon"] = cfg.epsilon;
        j["max_iters"] = cfg.max_iters;
        j["store_stride"] = cfg.store_stride;
        j["boundary"] = "cyclic";
        j["oracle_check"] = cfg.oracle_check;
        if (cfg.oracle_check) {
            j["oracle_iters"] = cfg.oracle_iters;
        }
        break;
    case Mode::mh:
        j["target"] = cfg.target;
        j["x_min"] = cfg.x_min;
        j["x_max"] = cfg.x_max;
        j["n_x"] = cfg.n_x;
        j["k"] = cfg.k;
        j["sigma"] = proposal_of(cfg).sigma;
        j["iters"] = cfg.iters;
        j["seed"] = cfg.seed;
        j["burn_in_fraction"] = cfg.burn_in_fraction;
        j["thinning"] = cfg.thinning;
        j["acceptance_mode"] = to_string(cfg.acceptance_mode);
        break;
    case Mode::dqw:
        j["theta"] = cfg.theta;
        j["gamma0"] = cfg.gamma0;
        j["gamma1"] = cfg.gamma1;
        j["steps"] = cfg.steps;
        j["init_coin"] = std::string(1, cfg.init_coin);
        break;
    case Mode::rw:
        j["p_right"] = cfg.p_right;
        j["steps"] = cfg.steps;
        break;
    case Mode::sweep:
        break;
    }
    if (cfg.mode == Mode::sweep) {
        j["sweep_mode"] = to_string(cfg.sweep_mode);
        j["sweep_param"] = cfg.sweep_param;
        j["sweep_values"] = cfg.sweep_values;
    }
    return j;
}

namespace {

std::ofstream open_output(const fs::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    return out;
}

void write_summary(const fs::path &dir, const json &summary) {
    auto out = open_output(dir / "summary.json");
    out << summary.dump(2) << '\n';
}

json run_qmcmc_experiment(const ExperimentConfig &cfg) {
    const ResolvedTarget target = resolve_target(cfg);
    const CircuitConfig circuit = circuit_of(cfg);
    RunOptions options;
    options.store_stride = cfg.store_stride;
    const ConvergenceReport report = run_qmcmc(circuit, target.expected, options);
    const fs::path &dir = cfg.output_dir;

    {
        auto out = open_output(dir / "evolution.csv");
        out << "iter,pos_index,pos_real,probability\n";
        for (std::size_t s = 0; s < report.stored_iters.size(); ++s) {
            const auto &dist = report.distributions[s];
            for (std::size_t i = 0; i < dist.size(); ++i) {
                out << report.stored_iters[s] << ',' << i << ','
                    << format_double(target.grid.real_of_index(i)) << ','
                    << format_double(dist[i]) << '\n';
            }
        }
    }
    {
        auto out = open_output(dir / "convergence.csv");
        out << "iter,tv_prev,tv_expected\n";
        for (std::size_t t = 0; t < report.tv_series.size(); ++t) {
            out << t << ',';
            if (t > 0) {
                out << format_double(report.tv_series[t]);
            }
            out << ',' << format_double(report.tv_to_expected_series[t]) << '\n';
        }
    }
    {
        auto out = open_output(dir / "final.csv");
        out << "pos_index,pos_real,obtained,expected\n";
        for (std::size_t i = 0; i < report.final_distribution.size(); ++i) {
            out << i << ',' << format_double(target.grid.real_of_index(i)) << ','
                << format_double(report.final_distribution[i]) << ','
                << format_double(report.expected[i]) << '\n';
        }
    }

    json summary;
    summary["mode"] = "qmcmc";
    summary["converged"] = report.converged();
    summary["converged_iter"] =
        report.converged_iter ? json(*report.converged_iter) : json(nullptr);
    summary["iterations_run"] = report.iterations_run;
    summary["qubit_cost"] = report.qubit_cost_at_convergence;
    summary["tv_to_expected"] = report.final_tv_to_expected();
    summary["tv_convention"] = "unhalved: sum_x |d1(x) - d2(x)|";
    summary["target_description"] = target.description;
    summary["kraus_completeness_deviation"] = report.kraus_completeness_deviation;
    summary["invariants"] = {
        {"max_trace_deviation", report.worst.trace_deviation},
        {"max_hermiticity_deviation", report.worst.hermiticity_deviation},
        {"min_diagonal", report.worst.min_diagonal},
        {"renormalizations", report.renormalizations},
    };
    summary["config"] = to_json(cfg);

    if (cfg.oracle_check) {
        const KrausSet kraus = build_kraus(circuit, target.expected);
        DensityState rho = DensityState::uniform_superposition(circuit.positions());
        double worst = 0.0;
        for (std::size_t t = 1; t <= cfg.oracle_iters; ++t) {
            rho = channel_step(rho, kraus);
            const auto channel = rho.diagonal();
            const auto pure = pure_run(circuit, target.expected, t);
            for (std::size_t i = 0; i < pure.size(); ++i) {
                worst = std::max(worst, std::abs(channel[i] - pure[i]));
            }
        }
        summary["oracle_max_diff"] = worst;
        summary["oracle_iters"] = cfg.oracle_iters;
    }
    write_summary(dir, summary);
    return summary;
}

json run_mh_experiment(const ExperimentConfig &cfg) {
    const ResolvedTarget target = resolve_target(cfg);
    const ProposalSpec proposal = proposal_of(cfg);
    const ChainResult chain = mh_run(target.expected, proposal, mh_options_of(cfg));
    const fs::path &dir = cfg.output_dir;
    {
        auto out = open_output(dir / "chain.csv");
        out << "iter,state\n";
        for (std::size_t i = 0; i < chain.trace.size(); ++i) {
            out << i + 1 << ',' << chain.trace[i] << '\n';
        }
    }
    const auto freq = chain.normalized_histogram();
    {
        auto out = open_output(dir / "histogram.csv");
        out << "pos_index,pos_real,count,frequency,expected\n";
        for (std::size_t i = 0; i < chain.histogram.size(); ++i) {
            out << i << ',' << format_double(target.grid.real_of_index(i)) << ','
                << chain.histogram[i] << ',' << format_double(freq[i]) << ','
                << format_double(target.expected[i]) << '\n';
        }
    }
    json summary;
    summary["mode"] = "mh";
    summary["rng"] = kRngAlgorithm;
    summary["initial_state"] = chain.initial_state;
    summary["raw_length"] = chain.raw_length;
    summary["retained_samples"] = chain.samples.size();
    summary["acceptance_rate"] = chain.acceptance_rate;
    summary["mode_occupancy"] = chain.mode_occupancy;
    summary["tv_to_expected"] =
        chain.samples.empty() ? json(nullptr) : json(tv_distance(freq, target.expected.probs()));
    summary["target_description"] = target.description;
    summary["config"] = to_json(cfg);
    write_summary(dir, summary);
    return summary;
}

void write_distribution(const fs::path &dir, const PositionDistribution &d) {
    auto out = open_output(dir / "distribution.csv");
    out << "position,probability\n";
    for (std::size_t i = 0; i < d.probs.size(); ++i) {
        out << d.min_position + static_cast<long long>(i) << ',' << format_double(d.probs[i])
            << '\n';
    }
}

json run_dqw_experiment(const ExperimentConfig &cfg) {
    const CoinParams coin{cfg.theta, cfg.gamma0, cfg.gamma1};
    const WalkState init = WalkState::localized(cfg.init_coin == 'T' ? Coin::T : Coin::H);
    const WalkState final_state = dqw_evolve(coin, cfg.steps, init);
    const PositionDistribution d = dqw_run(coin, cfg.steps, init);
    write_distribution(cfg.output_dir, d);
    json summary;
    summary["mode"] = "dqw";
    summary["mean"] = d.mean();
    summary["stddev"] = d.stddev();
    summary["norm"] = final_state.norm_squared();
    summary["config"] = to_json(cfg);
    write_summary(cfg.output_dir, summary);
    return summary;
}

json run_rw_experiment(const ExperimentConfig &cfg) {
    const PositionDistribution d = rw_distribution(cfg.p_right, cfg.steps);
    write_distribution(cfg.output_dir, d);
    json summary;
    summary["mode"] = "rw";
    summary["mean"] = d.mean();
    summary["stddev"] = d.stddev();
    summary["config"] = to_json(cfg);
    write_summary(cfg.output_dir, summary);
    return summary;
}

json run_single(const ExperimentConfig &cfg) {
    fs::create_directories(cfg.output_dir);
    switch (cfg.mode) {
    case Mode::qmcmc:
        return run_qmcmc_experiment(cfg);
    case Mode::mh:
        return run_mh_experiment(cfg);
    case Mode::dqw:
        return run_dqw_experiment(cfg);
    case Mode::rw:
        return run_rw_experiment(cfg);
    case Mode::sweep:
        break;
    }
    throw std::logic_error("run_single: sweep is not a single experiment");
}

json run_sweep(const ExperimentConfig &cfg) {
    fs::create_directories(cfg.output_dir);
    std::vector<ExperimentConfig> points;
    for (const auto &v : cfg.sweep_values) {
        ExperimentConfig point = cfg;
        point.mode = cfg.sweep_mode;
        apply_setting(point, cfg.sweep_param, v);
        point.output_dir = cfg.output_dir / (canonical_key(cfg.sweep_param) + "=" + v);
        points.push_back(std::move(point));
    }
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int inner_threads =
        static_cast<int>(std::max<std::size_t>(1, hw / std::max<std::size_t>(1, points.size())));

    std::vector<std::future<json>> running;
    running.reserve(points.size());
    for (const auto &point : points) {
        running.push_back(std::async(std::launch::async, [&point, inner_threads] {
#if defined(_OPENMP)
            omp_set_num_threads(inner_threads);
#else
            (void)inner_threads;
#endif
            return run_single(point);
        }));
    }
    json summary;
    summary["mode"] = "sweep";
    summary["config"] = to_json(cfg);
    summary["points"] = json::array();
    auto table = open_output(cfg.output_dir / "sweep.csv");
    if (cfg.sweep_mode == Mode::qmcmc) {
        table << "value,converged,converged_iter,iterations_run,qubit_cost,tv_expected\n";
    } else if (cfg.sweep_mode == Mode::mh) {
        table << "value,acceptance_rate,retained_samples,occupancy_lower,occupancy_upper,"
                 "tv_expected\n";
    } else {
        table << "value,mean,stddev\n";
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        json point = running[i].get();
        point["value"] = cfg.sweep_values[i];
        point["output_dir"] = points[i].output_dir.filename().string();
        const auto num = [](const json &j) {
            return j.is_null() ? std::string() : format_double(j.get<double>());
        };
        table << cfg.sweep_values[i] << ',';
        if (cfg.sweep_mode == Mode::qmcmc) {
            table << (point["converged"].get<bool>() ? "true" : "false") << ','
                  << (point["converged_iter"].is_null()
                          ? std::string()
                          : std::to_string(point["converged_iter"].get<std::size_t>()))
                  << ',' << point["iterations_run"].get<std::size_t>() << ','
                  << point["qubit_cost"].get<std::uint64_t>() << ','
                  << num(point["tv_to_expected"]) << '\n';
        } else if (cfg.sweep_mode == Mode::mh) {
            table << num(point["acceptance_rate"]) << ','
                  << point["retained_samples"].get<std::size_t>() << ','
                  << num(point["mode_occupancy"][0]) << ',' << num(point["mode_occupancy"][1])
                  << ',' << num(point["tv_to_expected"]) << '\n';
        } else {
            table << num(point["mean"]) << ',' << num(point["stddev"]) << '\n';
        }
        summary["points"].push_back(std::move(point));
    }
    write_summary(cfg.output_dir, summary);
    return summary;
}

} // namespace

json run_experiment(const ExperimentConfig &cfg) {
    validate(cfg);
    if (cfg.mode == Mode::sweep) {
        return run_sweep(cfg);
    }
    return run_single(cfg);
}

} // namespace qmcmc
