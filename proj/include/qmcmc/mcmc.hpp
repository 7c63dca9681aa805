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
 * Metropolis-Hastings on the discretized grid with discrete-Gaussian
 * proposals over a window of k neighbouring offsets.
 */

#pragma once

#include "qmcmc/target.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace qmcmc {

/// Offsets -k/2..-1, +1..+k/2 weighted by exp(-d^2 / (2 sigma^2)).
struct ProposalSpec {
    std::size_t k = 16;
    double sigma = 4.0;

    /// Default dispersion k/4 (about 95% of the Gaussian inside the window).
    static ProposalSpec with_default_sigma(std::size_t k);

    /// "Gauss-K" proposal: K adjacent states on each side, i.e. a window of
    /// k = 2K offsets with the default dispersion.
    static ProposalSpec gauss(std::size_t neighbours_per_side);

    void validate() const;
};

struct ProposalWeight {
    int offset;
    double probability;
};

/// Ascending by offset; symmetric in d <-> -d; sums to 1.
[[nodiscard]] std::vector<ProposalWeight> proposal_weights(const ProposalSpec &p);

enum class AcceptanceMode {
    metropolis, ///< accept with probability min(1, pi[t] / pi[x])
    greedy,     ///< accept only if pi[t] >= pi[x]
};

[[nodiscard]] std::string_view to_string(AcceptanceMode mode);

struct MhOptions {
    std::size_t iters = 100000;
    std::uint64_t seed = 1;
    double burn_in_fraction = 0.1;
    std::size_t thinning = 10;
    AcceptanceMode mode = AcceptanceMode::metropolis;

    void validate() const;
};

/// Identifier of the random stream used by mh_run.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53";

struct ChainResult {
    std::vector<std::size_t> trace;   ///< state after each of the raw iterations
    std::vector<std::size_t> samples; ///< post burn-in, every `thinning`-th
    double acceptance_rate = 0.0;
    std::size_t raw_length = 0;
    std::vector<std::uint64_t> histogram;   ///< over retained samples
    std::array<double, 2> mode_occupancy{}; ///< fraction in the lower / upper half
    std::size_t initial_state = 0;

    [[nodiscard]] std::vector<double> normalized_histogram() const;
};

/**
 * Chain x_0 ~ uniform, then per iteration: draw an offset, auto-reject moves
 * off the grid, accept per `mode`, record the state. The first
 * floor(burn_in_fraction * iters) recorded states are discarded, then every
 * `thinning`-th one is retained. Deterministic in (pi, p, options).
 */
[[nodiscard]] ChainResult mh_run(const ExpectedDistribution &pi, const ProposalSpec &p,
                                 const MhOptions &options);

} // namespace qmcmc
