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

#include "qmcmc/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmcmc {

namespace {

void require_normalized(std::span<const double> d, const char *which) {
    const double total = std::accumulate(d.begin(), d.end(), 0.0);
    if (!(std::abs(total - 1.0) <= 1e-9)) {
        throw std::invalid_argument(std::string("tv_distance: ") + which +
                                    " does not sum to 1 (sum = " + std::to_string(total) + ")");
    }
}

} // namespace

double tv_distance(std::span<const double> d1, std::span<const double> d2) {
    if (d1.size() != d2.size()) {
        throw std::domain_error("tv_distance: length mismatch (" + std::to_string(d1.size()) +
                                " vs " + std::to_string(d2.size()) + ")");
    }
    require_normalized(d1, "first distribution");
    require_normalized(d2, "second distribution");
    double tv = 0.0;
    for (std::size_t i = 0; i < d1.size(); ++i) {
        tv += std::abs(d1[i] - d2[i]);
    }
    return tv;
}

std::optional<std::size_t> detect_convergence(std::span<const double> series, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("detect_convergence: epsilon must be positive");
    }
    for (std::size_t t = 0; t < series.size(); ++t) {
        if (series[t] < epsilon) {
            return t;
        }
    }
    return std::nullopt;
}

std::uint64_t qubit_cost(std::uint64_t n_a, std::uint64_t n_x, std::uint64_t n_acc,
                         std::uint64_t t) {
    return (n_a + 1) * t + 2 * n_x + n_acc;
}

SamplingCost sampling_cost(double t_quantum, double t_classical, double t_lag,
                           double n_samples) {
    if (t_quantum < 0 || t_classical < 0 || t_lag < 0 || n_samples < 0) {
        throw std::invalid_argument("sampling_cost: arguments must be nonnegative");
    }
    return {n_samples * t_quantum, t_classical + n_samples * t_lag};
}

} // namespace qmcmc
