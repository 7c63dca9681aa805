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

#include "qmcmc/dqw.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmcmc {

void CoinParams::validate() const {
    if (!(theta >= 0.0 && theta < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("CoinParams: theta must be in [0, 2pi)");
    }
    if (!(gamma0 >= 0.0 && gamma0 < std::numbers::pi) ||
        !(gamma1 >= 0.0 && gamma1 < std::numbers::pi)) {
        throw std::invalid_argument("CoinParams: phases must be in [0, pi)");
    }
}

Matrix2 coin_matrix(const CoinParams &p) {
    p.validate();
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const auto e0 = std::polar(1.0, p.gamma0);
    const auto e1 = std::polar(1.0, p.gamma1);
    const auto e01 = std::polar(1.0, p.gamma0 + p.gamma1);
    return Matrix2{{{c, e0 * s}, {e1 * s, -e01 * c}}};
}

WalkState::WalkState(std::size_t extent) : extent_(extent), amps_(2 * (2 * extent + 1)) {}

WalkState WalkState::localized(Coin coin, std::size_t extent) {
    WalkState w(extent);
    w.at(coin, 0) = 1.0;
    return w;
}

std::size_t WalkState::index(Coin c, long long position) const {
    const auto e = static_cast<long long>(extent_);
    if (position < -e || position > e) {
        throw std::out_of_range("WalkState: position " + std::to_string(position) +
                                " outside lattice");
    }
    return static_cast<std::size_t>(position + e) * 2 + static_cast<std::size_t>(c);
}

std::complex<double> &WalkState::at(Coin c, long long position) {
    return amps_[index(c, position)];
}

const std::complex<double> &WalkState::at(Coin c, long long position) const {
    return amps_[index(c, position)];
}

double WalkState::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

WalkState WalkState::padded(std::size_t extent) const {
    if (extent < extent_) {
        throw std::invalid_argument("WalkState: cannot shrink lattice");
    }
    WalkState out(extent);
    const auto e = static_cast<long long>(extent_);
    for (long long x = -e; x <= e; ++x) {
        out.at(Coin::H, x) = at(Coin::H, x);
        out.at(Coin::T, x) = at(Coin::T, x);
    }
    return out;
}

WalkState dqw_evolve(const CoinParams &p, std::size_t steps, const WalkState &init) {
    const Matrix2 c = coin_matrix(p);
    const std::size_t extent = init.extent() + steps;
    WalkState cur = init.padded(extent);
    WalkState next(extent);
    const auto e = static_cast<long long>(extent);
    for (std::size_t step = 0; step < steps; ++step) {
        next = WalkState(extent);
        for (long long x = -e; x <= e; ++x) {
            const auto h = cur.at(Coin::H, x);
            const auto t = cur.at(Coin::T, x);
            if (h == 0.0 && t == 0.0) {
                continue;
            }
            // Coin, then H moves left and T moves right.
            next.at(Coin::H, x - 1) += c[0][0] * h + c[0][1] * t;
            next.at(Coin::T, x + 1) += c[1][0] * h + c[1][1] * t;
        }
        std::swap(cur, next);
    }
    return cur;
}

PositionDistribution dqw_run(const CoinParams &p, std::size_t steps, const WalkState &init) {
    const WalkState final_state = dqw_evolve(p, steps, init);
    const auto e = static_cast<long long>(final_state.extent());
    PositionDistribution out;
    out.min_position = -e;
    out.probs.reserve(static_cast<std::size_t>(2 * e + 1));
    for (long long x = -e; x <= e; ++x) {
        out.probs.push_back(std::norm(final_state.at(Coin::H, x)) +
                            std::norm(final_state.at(Coin::T, x)));
    }
    return out;
}

PositionDistribution rw_distribution(double p_right, std::size_t steps) {
    if (!(p_right >= 0.0 && p_right <= 1.0)) {
        throw std::invalid_argument("rw_distribution: p_right must be in [0, 1]");
    }
    const std::size_t width = 2 * steps + 1;
    std::vector<double> cur(width, 0.0);
    std::vector<double> next(width, 0.0);
    cur[steps] = 1.0;
    for (std::size_t s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < width; ++i) {
            if (cur[i] == 0.0) {
                continue;
            }
            if (i + 1 < width) {
                next[i + 1] += p_right * cur[i];
            }
            if (i > 0) {
                next[i - 1] += (1.0 - p_right) * cur[i];
            }
        }
        std::swap(cur, next);
    }
    return {-static_cast<long long>(steps), std::move(cur)};
}

double PositionDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        m += probs[i] * static_cast<double>(min_position + static_cast<long long>(i));
    }
    return m;
}

double PositionDistribution::stddev() const {
    const double m = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double d = static_cast<double>(min_position + static_cast<long long>(i)) - m;
        v += probs[i] * d * d;
    }
    return std::sqrt(v);
}

double PositionDistribution::at(long long position) const {
    const long long i = position - min_position;
    if (i < 0 || i >= static_cast<long long>(probs.size())) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(i)];
}

} // namespace qmcmc
