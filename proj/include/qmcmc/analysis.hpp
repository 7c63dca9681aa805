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
 * Distribution distances, convergence detection and the qubit / sampling
 * cost bookkeeping used to compare the quantum walk with classical MCMC.
 *
 * Total variation is reported UNHALVED throughout: sum_x |d1(x) - d2(x)|,
 * which lies in [0, 2]. Thresholds are expressed in the same convention.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace qmcmc {

/// Unhalved total variation distance. Throws std::domain_error on length
/// mismatch and std::invalid_argument if an input does not sum to 1 within
/// 1e-9.
[[nodiscard]] double tv_distance(std::span<const double> d1, std::span<const double> d2);

/// First index t with series[t] < epsilon.
[[nodiscard]] std::optional<std::size_t> detect_convergence(std::span<const double> series,
                                                             double epsilon);

/// (n_a + 1) t + 2 n_x + n_acc: live qubits after t iterations, counting
/// one retired action register and coin per iteration and the trial
/// register (same width as the position register).
[[nodiscard]] std::uint64_t qubit_cost(std::uint64_t n_a, std::uint64_t n_x,
                                       std::uint64_t n_acc, std::uint64_t t);

struct SamplingCost {
    double quantum_iters;
    double classical_iters;
};

/// Iterations needed to draw n_samples independent samples: the circuit is
/// rerun from scratch per sample (N T_q); a converged chain pays its burn-in
/// once plus the thinning lag per sample (T_c + N T_l).
[[nodiscard]] SamplingCost sampling_cost(double t_quantum, double t_classical, double t_lag,
                                         double n_samples);

struct CostAccount {
    std::uint64_t n_a = 0;
    std::uint64_t n_x = 0;
    std::uint64_t n_acc = 0;
    std::uint64_t t = 0;

    [[nodiscard]] std::uint64_t total_qubits() const { return qubit_cost(n_a, n_x, n_acc, t); }
    [[nodiscard]] double quantum_sampling_iters(double n_samples) const {
        return static_cast<double>(t) * n_samples;
    }
    [[nodiscard]] static double classical_sampling_iters(double t_classical, double t_lag,
                                                         double n_samples) {
        return t_classical + n_samples * t_lag;
    }
};

} // namespace qmcmc
