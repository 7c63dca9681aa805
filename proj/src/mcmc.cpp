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

#include "qmcmc/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmcmc {

ProposalSpec ProposalSpec::with_default_sigma(std::size_t k) {
    return {k, static_cast<double>(k) / 4.0};
}

ProposalSpec ProposalSpec::gauss(std::size_t neighbours_per_side) {
    return with_default_sigma(2 * neighbours_per_side);
}

void ProposalSpec::validate() const {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("ProposalSpec: k must be even and >= 2, got " +
                                    std::to_string(k));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("ProposalSpec: sigma must be positive");
    }
}

std::vector<ProposalWeight> proposal_weights(const ProposalSpec &p) {
    p.validate();
    const auto half = static_cast<int>(p.k / 2);
    std::vector<double> side(static_cast<std::size_t>(half));
    double total = 0.0;
    for (int d = 1; d <= half; ++d) {
        const double w = std::exp(-static_cast<double>(d) * d / (2.0 * p.sigma * p.sigma));
        side[static_cast<std::size_t>(d - 1)] = w;
        total += 2.0 * w;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("ProposalSpec: sigma too small, all weights underflow");
    }
    std::vector<ProposalWeight> out;
    out.reserve(p.k);
    for (int d = half; d >= 1; --d) {
        out.push_back({-d, side[static_cast<std::size_t>(d - 1)] / total});
    }
    for (int d = 1; d <= half; ++d) {
        out.push_back({d, side[static_cast<std::size_t>(d - 1)] / total});
    }
    return out;
}

std::string_view to_string(AcceptanceMode mode) {
    return mode == AcceptanceMode::greedy ? "greedy" : "metropolis";
}

void MhOptions::validate() const {
    if (iters < 1) {
        throw std::invalid_argument("MhOptions: iters must be at least 1");
    }
    if (!(burn_in_fraction >= 0.0 && burn_in_fraction < 1.0)) {
        throw std::invalid_argument("MhOptions: burn_in_fraction must be in [0, 1)");
    }
    if (thinning < 1) {
        throw std::invalid_argument("MhOptions: thinning must be at least 1");
    }
}

std::vector<double> ChainResult::normalized_histogram() const {
    std::vector<double> out(histogram.size(), 0.0);
    if (samples.empty()) {
        return out;
    }
    const auto total = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        out[i] = static_cast<double>(histogram[i]) / total;
    }
    return out;
}

namespace {

// Top 53 bits -> [0, 1). Independent of the library's distribution classes.
double uniform01(std::mt19937_64 &gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

ChainResult mh_run(const ExpectedDistribution &pi, const ProposalSpec &p,
                   const MhOptions &options) {
    options.validate();
    const auto weights = proposal_weights(p);
    std::vector<double> cdf(weights.size());
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        running += weights[i].probability;
        cdf[i] = running;
    }
    cdf.back() = 1.0;

    const std::size_t n = pi.size();
    std::mt19937_64 gen(options.seed);

    ChainResult result;
    result.raw_length = options.iters;
    result.trace.reserve(options.iters);
    result.initial_state =
        std::min(n - 1, static_cast<std::size_t>(uniform01(gen) * static_cast<double>(n)));

    std::size_t x = result.initial_state;
    std::size_t accepted = 0;
    for (std::size_t it = 0; it < options.iters; ++it) {
        const double u_prop = uniform01(gen);
        const double u_acc = uniform01(gen);
        const auto pick = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u_prop) - cdf.begin());
        const int offset = weights[std::min(pick, weights.size() - 1)].offset;
        const long long trial = static_cast<long long>(x) + offset;
        if (trial >= 0 && trial < static_cast<long long>(n)) {
            const auto t = static_cast<std::size_t>(trial);
            bool accept = false;
            if (options.mode == AcceptanceMode::greedy) {
                accept = pi[t] >= pi[x];
            } else {
                accept = u_acc < std::min(1.0, pi[t] / pi[x]);
            }
            if (accept) {
                x = t;
                ++accepted;
            }
        }
        result.trace.push_back(x);
    }
    result.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(options.iters);

    const auto burn_in =
        static_cast<std::size_t>(options.burn_in_fraction * static_cast<double>(options.iters));
    result.histogram.assign(n, 0);
    std::size_t lower = 0;
    for (std::size_t i = burn_in; i < result.trace.size(); i += options.thinning) {
        const std::size_t s = result.trace[i];
        result.samples.push_back(s);
        ++result.histogram[s];
        if (s < n / 2) {
            ++lower;
        }
    }
    if (!result.samples.empty()) {
        const auto total = static_cast<double>(result.samples.size());
        result.mode_occupancy = {static_cast<double>(lower) / total,
                                 static_cast<double>(result.samples.size() - lower) / total};
    }
    return result;
}

} // namespace qmcmc
