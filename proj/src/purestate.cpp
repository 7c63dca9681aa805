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

#include "qmcmc/purestate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmcmc {

FullState::FullState() : amps_(1, {1.0, 0.0}) {}

std::size_t FullState::add_register(std::string name, int width) {
    if (width < 1) {
        throw std::invalid_argument("FullState: register width must be positive");
    }
    if (qubits_ + width > kMaxPureQubits) {
        throw std::length_error("FullState: adding '" + name + "' would exceed " +
                                std::to_string(kMaxPureQubits) + " live qubits");
    }
    layout_.push_back({std::move(name), width, qubits_});
    qubits_ += width;
    // New qubits are the most significant bits, so |old> (x) |0> keeps every
    // existing amplitude at its index.
    amps_.resize(std::size_t{1} << qubits_, {0.0, 0.0});
    return layout_.size() - 1;
}

std::size_t FullState::value(std::size_t basis, std::size_t reg) const {
    const auto &r = layout_.at(reg);
    return (basis >> r.offset) & ((std::size_t{1} << r.width) - 1);
}

std::size_t FullState::with_value(std::size_t basis, std::size_t reg, std::size_t v) const {
    const auto &r = layout_.at(reg);
    const std::size_t mask = ((std::size_t{1} << r.width) - 1) << r.offset;
    return (basis & ~mask) | ((v << r.offset) & mask);
}

void FullState::apply_hadamard(std::size_t reg) {
    const auto &r = layout_.at(reg);
    const double h = std::numbers::sqrt2 / 2.0;
    for (int q = 0; q < r.width; ++q) {
        const std::size_t bit = std::size_t{1} << (r.offset + q);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & bit) != 0) {
                continue;
            }
            const auto a0 = amps_[i];
            const auto a1 = amps_[i | bit];
            amps_[i] = h * (a0 + a1);
            amps_[i | bit] = h * (a0 - a1);
        }
    }
}

void FullState::apply_permutation(const std::function<std::size_t(std::size_t)> &map) {
    std::vector<std::complex<double>> out(amps_.size());
    std::vector<bool> hit(amps_.size(), false);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const std::size_t j = map(i);
        if (j >= amps_.size() || hit[j]) {
            throw std::logic_error("FullState: gate is not a basis permutation");
        }
        hit[j] = true;
        out[j] = amps_[i];
    }
    amps_ = std::move(out);
}

void FullState::apply_controlled_rotation(
    std::size_t control, std::size_t target,
    const std::function<std::pair<double, double>(std::size_t)> &rotation) {
    const auto &t = layout_.at(target);
    if (t.width != 1) {
        throw std::invalid_argument("FullState: rotation target must be a single qubit");
    }
    const std::size_t bit = std::size_t{1} << t.offset;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const auto [c, s] = rotation(value(i, control));
        const auto a0 = amps_[i];
        const auto a1 = amps_[i | bit];
        if (c == 0.0 && s == 1.0) {
            amps_[i] = a1;
            amps_[i | bit] = a0;
        } else {
            amps_[i] = c * a0 - s * a1;
            amps_[i | bit] = s * a0 + c * a1;
        }
    }
}

double FullState::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

double FullState::mass_outside_zero(std::size_t reg) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (value(i, reg) != 0) {
            acc += std::norm(amps_[i]);
        }
    }
    return acc;
}

std::vector<double> FullState::marginal(std::size_t reg) const {
    std::vector<double> out(std::size_t{1} << layout_.at(reg).width, 0.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out[value(i, reg)] += std::norm(amps_[i]);
    }
    return out;
}

int pure_qubit_count(const CircuitConfig &config, std::size_t t) {
    return (config.n_a + 1) * static_cast<int>(t) + 2 * config.n_x + config.n_acc;
}

PureRunResult pure_simulate(const CircuitConfig &config, const ExpectedDistribution &pi,
                            std::size_t t) {
    config.validate();
    const std::size_t n = config.positions();
    if (pi.size() != n) {
        throw std::domain_error("pure_run: distribution size does not match 2^n_x");
    }
    const int needed = pure_qubit_count(config, t);
    if (t > 64 || needed > kMaxPureQubits) {
        throw std::length_error("pure_run: " + std::to_string(t) + " iterations need " +
                                std::to_string(needed) + " live qubits ((n_a+1)t + 2n_x + n_acc)" +
                                ", above the cap of " + std::to_string(kMaxPureQubits) +
                                "; use the channel engine for larger runs");
    }
    const std::size_t intervals = config.intervals();
    const std::size_t half_actions = config.actions() / 2;

    PureRunResult result;
    FullState &state = result.state;
    const std::size_t x_reg = state.add_register("x", config.n_x);
    const std::size_t t_reg = state.add_register("t", config.n_x);
    const std::size_t acc_reg = state.add_register("acc", config.n_acc);
    result.position_register = x_reg;
    state.apply_hadamard(x_reg);

    auto check_norm = [&] {
        result.max_norm_drift =
            std::max(result.max_norm_drift, std::abs(state.norm_squared() - 1.0));
        if (result.max_norm_drift > 1e-10) {
            throw std::logic_error("pure_run: norm drift " +
                                   std::to_string(result.max_norm_drift));
        }
    };
    auto wrap = [n](long long v) {
        const auto nn = static_cast<long long>(n);
        return static_cast<std::size_t>(((v % nn) + nn) % nn);
    };
    // Move encoded by an action label: a + [a >= |A|/2] - |A|/2.
    auto move = [half_actions](std::size_t a) {
        return static_cast<long long>(a) + (a >= half_actions ? 1 : 0) -
               static_cast<long long>(half_actions);
    };
    auto interval = [&](std::size_t x, std::size_t trial) {
        return disc_index(acceptance_ratio(pi, x, trial), intervals);
    };

    for (std::size_t iter = 0; iter < t; ++iter) {
        const std::size_t a_reg = state.add_register("a" + std::to_string(iter), config.n_a);
        const std::size_t coin_reg = state.add_register("coin" + std::to_string(iter), 1);

        state.apply_hadamard(a_reg);
        check_norm();

        // TRIAL: |a, x, t> -> |a, x, x + move(a) + t>
        auto trial = [&](std::size_t i, long long sign) {
            const auto x = static_cast<long long>(state.value(i, x_reg));
            const auto tv = static_cast<long long>(state.value(i, t_reg));
            const long long m = move(state.value(i, a_reg));
            return state.with_value(i, t_reg, wrap(tv + sign * (x + m)));
        };
        // DISC: |x, t, acc> -> |x, t, D(x, t) + acc>
        auto disc = [&](std::size_t i, long long sign) {
            const std::size_t x = state.value(i, x_reg);
            const std::size_t tv = state.value(i, t_reg);
            const auto acc = static_cast<long long>(state.value(i, acc_reg));
            const auto d = static_cast<long long>(interval(x, tv));
            const auto m = static_cast<long long>(intervals);
            return state.with_value(i, acc_reg,
                                    static_cast<std::size_t>((((acc + sign * d) % m) + m) % m));
        };

        state.apply_permutation([&](std::size_t i) { return trial(i, +1); });
        check_norm();
        state.apply_permutation([&](std::size_t i) { return disc(i, +1); });
        check_norm();
        state.apply_controlled_rotation(acc_reg, coin_reg, [intervals](std::size_t idx) {
            const double p = coin_prob(idx, intervals);
            return std::pair{std::sqrt(1.0 - p), std::sqrt(p)};
        });
        check_norm();
        state.apply_permutation([&](std::size_t i) { return disc(i, -1); });
        check_norm();
        state.apply_permutation([&](std::size_t i) { return trial(i, -1); });
        check_norm();

        const double residue =
            std::max(state.mass_outside_zero(t_reg), state.mass_outside_zero(acc_reg));
        result.max_uncompute_residue = std::max(result.max_uncompute_residue, residue);
        if (residue > 1e-12) {
            throw std::logic_error("pure_run: uncomputation left " + std::to_string(residue) +
                                   " probability outside |0> on |t>/|acc>");
        }

        // SHIFT: coin = 1 moves |x> by move(a).
        state.apply_permutation([&](std::size_t i) {
            if (state.value(i, coin_reg) == 0) {
                return i;
            }
            const auto x = static_cast<long long>(state.value(i, x_reg));
            return state.with_value(i, x_reg, wrap(x + move(state.value(i, a_reg))));
        });
        check_norm();
    }
    result.distribution = state.marginal(x_reg);
    return result;
}

std::vector<double> pure_run(const CircuitConfig &config, const ExpectedDistribution &pi,
                             std::size_t t) {
    return pure_simulate(config, pi, t).distribution;
}

std::vector<double> pure_run(const CircuitConfig &config, const TargetSpec &spec,
                             std::size_t t) {
    return pure_run(config, discretize_target(spec), t);
}

} // namespace qmcmc
