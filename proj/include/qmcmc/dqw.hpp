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
 * One-dimensional discrete quantum walk on Z with a two-state coin
 * {H (move left), T (move right)}, and the classical random walk it is
 * compared against.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qmcmc {

enum class Coin { H = 0, T = 1 };

struct CoinParams {
    double theta = 0.7853981633974483; // pi/4: Hadamard
    double gamma0 = 0.0;
    double gamma1 = 0.0;

    /// Throws std::invalid_argument unless theta in [0, 2pi), gammas in [0, pi).
    void validate() const;
};

using Matrix2 = std::array<std::array<std::complex<double>, 2>, 2>;

/// [[cos t, e^{i g0} sin t], [e^{i g1} sin t, -e^{i(g0+g1)} cos t]], rows and
/// columns ordered H, T.
[[nodiscard]] Matrix2 coin_matrix(const CoinParams &p);

/// Amplitudes over (coin, position) for positions -extent..extent.
class WalkState {
  public:
    explicit WalkState(std::size_t extent);

    /// |coin, 0> on a lattice of the given extent.
    static WalkState localized(Coin coin, std::size_t extent = 0);

    [[nodiscard]] std::size_t extent() const noexcept { return extent_; }
    [[nodiscard]] std::complex<double> &at(Coin c, long long position);
    [[nodiscard]] const std::complex<double> &at(Coin c, long long position) const;
    [[nodiscard]] double norm_squared() const;

    /// Same amplitudes on a larger lattice.
    [[nodiscard]] WalkState padded(std::size_t extent) const;

  private:
    [[nodiscard]] std::size_t index(Coin c, long long position) const;

    std::size_t extent_;
    std::vector<std::complex<double>> amps_;
};

/// Probability over consecutive positions starting at min_position.
struct PositionDistribution {
    long long min_position = 0;
    std::vector<double> probs;

    [[nodiscard]] double mean() const;
    [[nodiscard]] double stddev() const;
    [[nodiscard]] double at(long long position) const;
};

/// Applies U = S (C (x) I) `steps` times; the lattice grows by `steps` on each
/// side so no amplitude reaches a boundary.
[[nodiscard]] WalkState dqw_evolve(const CoinParams &p, std::size_t steps, const WalkState &init);

/// Position marginal of dqw_evolve.
[[nodiscard]] PositionDistribution dqw_run(const CoinParams &p, std::size_t steps,
                                           const WalkState &init);

/// Exact distribution of a walk that steps +1 with probability p_right and
/// -1 otherwise, after `steps` steps, on positions -steps..steps.
[[nodiscard]] PositionDistribution rw_distribution(double p_right, std::size_t steps);

} // namespace qmcmc
