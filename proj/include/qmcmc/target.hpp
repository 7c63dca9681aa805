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
 * Target densities, the position grid and discretization of a target into
 * the expected distribution the walk converges towards.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qmcmc {

/// Relative floor applied to the discretized density, as a fraction of its
/// maximum on the grid. Keeps every acceptance ratio finite.
inline constexpr double kDensityFloor = 1e-12;

/**
 * Mapping between basis-state labels |x> of an n_x qubit register and
 * evenly spaced real positions on [x_min, x_max].
 */
class Grid {
  public:
    Grid(int n_x, double x_min, double x_max);

    [[nodiscard]] int qubits() const noexcept { return n_x_; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] double x_min() const noexcept { return x_min_; }
    [[nodiscard]] double x_max() const noexcept { return x_max_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }

    /// Real position of basis state i. real(0) == x_min and
    /// real(N-1) == x_max hold exactly.
    [[nodiscard]] double real_of_index(std::size_t i) const;

  private:
    int n_x_;
    std::size_t size_;
    double x_min_;
    double x_max_;
    double spacing_;
};

[[nodiscard]] double real_of_index(std::size_t i, const Grid &grid);

struct GaussianComponent {
    double weight = 1.0;
    double mean = 0.0;
    double sigma = 1.0;
};

/**
 * A mixture of Gaussians restricted to a grid. Weights are normalized to sum
 * to one on construction.
 */
class TargetSpec {
  public:
    TargetSpec(std::vector<GaussianComponent> components, Grid grid);

    [[nodiscard]] const std::vector<GaussianComponent> &components() const noexcept {
        return components_;
    }
    [[nodiscard]] const Grid &grid() const noexcept { return grid_; }

    /// Mixture density at a real position.
    [[nodiscard]] double density(double x) const;

    /// Human readable form, e.g. "0.5*N(-3;1)+0.5*N(3;1)".
    [[nodiscard]] std::string describe() const;

  private:
    std::vector<GaussianComponent> components_;
    Grid grid_;
};

/**
 * Strictly positive probability vector over the 2^n_x grid states.
 */
class ExpectedDistribution {
  public:
    /// Validates positivity and normalizes. Throws std::invalid_argument on
    /// empty input, non-finite or non-positive entries.
    static ExpectedDistribution from_probabilities(std::vector<double> probs);
    static ExpectedDistribution uniform(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
    [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }

  private:
    explicit ExpectedDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;
};

/// Point evaluation of the mixture at every grid node, floored at
/// kDensityFloor * max and normalized.
[[nodiscard]] ExpectedDistribution discretize_target(const TargetSpec &spec);

/**
 * Parses mixtures written as "N(0,1)", "N(-3;1)+N(3;1)" or
 * "0.3*N(0,1)+0.7*N(3,0.5)". Unweighted terms get equal weight.
 * Throws std::invalid_argument with the offending position on bad input.
 */
[[nodiscard]] std::vector<GaussianComponent> parse_mixture(const std::string &text);

} // namespace qmcmc
