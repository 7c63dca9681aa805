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

// qmcmc: experiment runner for the quantum-walk MCMC simulator.
//
//   qmcmc qmcmc --target "N(0,1)" --range -5 5 --nx 4 --nacc 4 --na 1
//   qmcmc sweep --param na --values 1,2,8 --target "N(-3,1)+N(3,1)" --nx 9 --nacc 9
//   qmcmc mh --target "N(-5,1)+N(5,1)" --range -10 10 --nx 10 --gauss 256 --seed 3
//   qmcmc dqw --steps 100
//   qmcmc rw --steps 100 --p-right 0.5
//
// Flags override values read from --config.

#include "qmcmc/experiment.hpp"
#include "qmcmc/kernels.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using Settings = std::vector<std::pair<std::string, std::string>>;

struct Flag {
    std::string key;
    CLI::Option *option;
    std::string value;
    std::vector<std::string> pair;
};

class Subcommand {
  public:
    Subcommand(CLI::App &app, const std::string &name, const std::string &help, qmcmc::Mode mode)
        : cmd_(app.add_subcommand(name, help)), mode_(mode) {
        cmd_->add_option("--config", config_path_, "flat key = value configuration file");
        add("--out", "output_dir", "output directory");
    }

    void add(const std::string &flag, const std::string &key, const std::string &help) {
        auto &f = flags_.emplace_back(std::make_unique<Flag>());
        f->key = key;
        f->option = cmd_->add_option(flag, f->value, help);
    }

    void add_switch(const std::string &flag, const std::string &key, const std::string &help) {
        auto &f = flags_.emplace_back(std::make_unique<Flag>());
        f->key = key;
        f->option = cmd_->add_flag(flag, help);
    }

    void add_range() {
        auto &f = flags_.emplace_back(std::make_unique<Flag>());
        f->key = "range";
        f->option = cmd_->add_option("--range", f->pair, "grid interval: lo hi")->expected(2);
        f->option->allow_extra_args(false);
    }

    void add_circuit() {
        add("--target", "target", "mixture such as \"N(-3,1)+N(3,1)\", or uniform");
        add_range();
        add("--nx", "n_x", "position qubits");
        add("--na", "n_a", "action qubits");
        add("--nacc", "n_acc", "acceptance qubits");
        add("--epsilon", "epsilon", "convergence threshold on unhalved TV");
        add("--max-iters", "max_iters", "iteration cap");
        add("--store-stride", "store_stride", "store every n-th iteration (0 = auto)");
        add_switch("--oracle-check", "oracle_check", "compare with the state-vector oracle");
        add("--oracle-iters", "oracle_iters", "iterations for --oracle-check");
    }

    void add_mh(bool with_grid) {
        if (with_grid) {
            add("--target", "target", "mixture such as \"N(-5,1)+N(5,1)\"");
            add_range();
            add("--nx", "n_x", "position qubits (grid of 2^nx states)");
        }
        add("--k", "k", "proposal window size (even)");
        add("--gauss", "gauss", "Gauss-K proposal: K neighbours per side");
        add("--sigma", "sigma", "proposal dispersion (default k/4)");
        add("--iters", "iters", "chain length");
        add("--seed", "seed", "RNG seed");
        add("--burn-in", "burn_in_fraction", "discarded prefix fraction");
        add("--thinning", "thinning", "keep every n-th state");
        add("--acceptance", "acceptance_mode", "metropolis | greedy");
    }

    [[nodiscard]] bool parsed() const { return cmd_->parsed(); }

    qmcmc::ExperimentConfig build() const {
        qmcmc::ExperimentConfig cfg;
        if (!config_path_.empty()) {
            qmcmc::load_config_file(config_path_, cfg);
        }
        cfg.mode = mode_;
        for (const auto &f : flags_) {
            if (f->option->count() == 0) {
                continue;
            }
            try {
                if (f->key == "range") {
                    qmcmc::apply_setting(cfg, "range", f->pair.at(0) + " " + f->pair.at(1));
                } else if (f->key == "oracle_check") {
                    qmcmc::apply_setting(cfg, f->key, "true");
                } else {
                    qmcmc::apply_setting(cfg, f->key, f->value);
                }
            } catch (const std::exception &e) {
                throw qmcmc::ConfigError("--" + f->option->get_name(false, true) + ": " +
                                         e.what());
            }
        }
        return cfg;
    }

    CLI::App *app() { return cmd_; }

  private:
    CLI::App *cmd_;
    qmcmc::Mode mode_;
    std::string config_path_;
    std::vector<std::unique_ptr<Flag>> flags_;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-walk MCMC simulator: channel engine, walks and Metropolis-Hastings"};
    app.require_subcommand(1);
    bool list_kernels = false;
    std::string kernel;
    app.add_flag("--list-kernels", list_kernels, "print available SIMD kernels and exit");
    app.add_option("--kernel", kernel, "force a kernel: scalar | avx2 | neon");

    std::vector<std::unique_ptr<Subcommand>> subs;
    auto &qm = subs.emplace_back(std::make_unique<Subcommand>(
        app, "qmcmc", "run the QMCMC circuit as a channel until convergence", qmcmc::Mode::qmcmc));
    qm->add_circuit();

    auto &dq = subs.emplace_back(std::make_unique<Subcommand>(
        app, "dqw", "plain discrete quantum walk on Z", qmcmc::Mode::dqw));
    dq->add("--theta", "theta", "coin angle in [0, 2pi)");
    dq->add("--gamma0", "gamma0", "coin phase in [0, pi)");
    dq->add("--gamma1", "gamma1", "coin phase in [0, pi)");
    dq->add("--steps", "steps", "number of steps");
    dq->add("--init-coin", "init_coin", "H or T");

    auto &rw = subs.emplace_back(std::make_unique<Subcommand>(
        app, "rw", "classical random walk on Z", qmcmc::Mode::rw));
    rw->add("--p-right", "p_right", "probability of a +1 step");
    rw->add("--steps", "steps", "number of steps");

    auto &mh = subs.emplace_back(std::make_unique<Subcommand>(
        app, "mh", "Metropolis-Hastings on the discretized grid", qmcmc::Mode::mh));
    mh->add_mh(true);

    auto &sw = subs.emplace_back(std::make_unique<Subcommand>(
        app, "sweep", "run one experiment per parameter value, concurrently",
        qmcmc::Mode::sweep));
    sw->add("--param", "sweep_param", "parameter to vary, e.g. na, nacc, nx, seed, gauss");
    sw->add("--values", "sweep_values", "comma separated values");
    sw->add("--mode", "sweep_mode", "qmcmc | mh (default qmcmc)");
    sw->add_circuit();
    sw->add_mh(false);

    // --list-kernels is allowed without a subcommand.
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--list-kernels") {
            for (auto isa : qmcmc::kernels::available()) {
                std::cout << qmcmc::kernels::name(isa)
                          << (isa == qmcmc::kernels::active().isa ? " (active)" : "") << '\n';
            }
            return 0;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (!kernel.empty()) {
            bool found = false;
            for (auto isa : {qmcmc::kernels::Isa::scalar, qmcmc::kernels::Isa::avx2,
                             qmcmc::kernels::Isa::neon}) {
                if (kernel == qmcmc::kernels::name(isa)) {
                    qmcmc::kernels::select(isa);
                    found = true;
                }
            }
            if (!found) {
                throw qmcmc::ConfigError("--kernel: unknown kernel '" + kernel + "'");
            }
        }
        for (const auto &sub : subs) {
            if (!sub->parsed()) {
                continue;
            }
            const auto summary = qmcmc::run_experiment(sub->build());
            if (summary.contains("converged") && !summary["converged"].get<bool>()) {
                std::cerr << "qmcmc: not converged within max_iters\n";
            }
            std::cout << summary.dump(2) << '\n';
        }
    } catch (const qmcmc::ConfigError &e) {
        std::cerr << "qmcmc: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "qmcmc: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "qmcmc: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
