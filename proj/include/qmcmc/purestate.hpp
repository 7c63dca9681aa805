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

/**
 * @file
 * Literal state-vector simulation of the quantum-walk MCMC circuit. Every
 * iteration appends a fresh action register and coin qubit; retired ones
 * stay in the vector untouched. Exponential in the iteration count, so it
 * only serves as an oracle for the channel engine on tiny instances.
 */

#pragma once

#include "qmcmc/engine.hpp"
#include "qmcmc/target.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qmcmc {

/// Live-qubit cap for the state vector (2^26 amplitudes ~ 1 GiB).
inline constexpr int kMaxPureQubits = 26;

struct RegisterSpec {
    std::string name;
    int width;
    int offset; ///< position of the least significant qubit
};

class FullState {
  public:
    /// Empty register set; the single amplitude is 1.
    FullState();

    /// Appends a register in |0> above all existing qubits. Returns its id.
    std::size_t add_register(std::string name, int width);

    [[nodiscard]] int live_qubits() const noexcept { return qubits_; }
    [[nodiscard]] const std::vector<RegisterSpec> &layout() const noexcept { return layout_; }
    [[nodiscard]] std::span<const std::complex<double>> amplitudes() const noexcept {
        return amps_;
    }

    [[nodiscard]] std::size_t value(std::size_t basis, std::size_t reg) const;
    [[nodiscard]] std::size_t with_value(std::size_t basis, std::size_t reg,
                                         std::size_t v) const;

    /// Hadamard on every qubit of a register.
    void apply_hadamard(std::size_t reg);

    /// Basis permutation |i> -> |map(i)>. Throws std::logic_error if map is
    /// not a bijection.
    void apply_permutation(const std::function<std::size_t(std::size_t)> &map);

    /**
     * For every basis state, looks up (cos, sin) = rotation(value of control)
     * and applies [[cos, -sin], [sin, cos]] to the single-qubit register
     * target. A rotation with cos == 0 and sin == 1 is applied as X.
     */
    void apply_controlled_rotation(
        std::size_t control, std::size_t target,
        const std::function<std::pair<double, double>(std::size_t)> &rotation);

    [[nodiscard]] double norm_squared() const;
    /// Probability that register reg is not |0>.
    [[nodiscard]] double mass_outside_zero(std::size_t reg) const;
    [[nodiscard]] std::vector<double> marginal(std::size_t reg) const;

  private:
    std::vector<RegisterSpec> layout_;
    int qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

struct PureRunResult {
    std::vector<double> distribution;
    FullState state;
    std::size_t position_register = 0;
    double max_norm_drift = 0.0;
    double max_uncompute_residue = 0.0;
};

/// Live qubits after t iterations; the memory guard checks this against
/// kMaxPureQubits before allocating anything.
[[nodiscard]] int pure_qubit_count(const CircuitConfig &config, std::size_t t);

/**
 * Runs t circuit iterations from the equal superposition on |x>.
 * Throws std::length_error if the qubit count exceeds kMaxPureQubits and
 * std::logic_error if |t> or |acc> are not returned to |0> (residue > 1e-12)
 * or the norm drifts by more than 1e-10.
 */
[[nodiscard]] PureRunResult pure_simulate(const CircuitConfig &config,
                                          const ExpectedDistribution &pi, std::size_t t);

[[nodiscard]] std::vector<double> pure_run(const CircuitConfig &config,
                                           const ExpectedDistribution &pi, std::size_t t);
[[nodiscard]] std::vector<double> pure_run(const CircuitConfig &config, const TargetSpec &spec,
                                           std::size_t t);

} // namespace qmcmc
