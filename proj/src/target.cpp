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

#include "qmcmc/target.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qmcmc {

Grid::Grid(int n_x, double x_min, double x_max)
    : n_x_(n_x), size_(0), x_min_(x_min), x_max_(x_max), spacing_(0.0) {
    if (n_x < 1 || n_x > 30) {
        throw std::invalid_argument("Grid: n_x must be in [1, 30], got " + std::to_string(n_x));
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw std::invalid_argument("Grid: require finite x_min < x_max");
    }
    size_ = std::size_t{1} << n_x;
    spacing_ = (x_max - x_min) / static_cast<double>(size_ - 1);
}

double Grid::real_of_index(std::size_t i) const {
    if (i >= size_) {
        throw std::domain_error("real_of_index: index " + std::to_string(i) +
                                " out of range for " + std::to_string(size_) + " states");
    }
    // Interpolate from the nearer endpoint so both ends are exact and
    // symmetric intervals produce exactly mirrored nodes.
    const std::size_t mirror = size_ - 1 - i;
    if (i <= mirror) {
        return x_min_ + static_cast<double>(i) * spacing_;
    }
    return x_max_ - static_cast<double>(mirror) * spacing_;
}

double real_of_index(std::size_t i, const Grid &grid) { return grid.real_of_index(i); }

TargetSpec::TargetSpec(std::vector<GaussianComponent> components, Grid grid)
    : components_(std::move(components)), grid_(grid) {
    if (components_.empty()) {
        throw std::invalid_argument("TargetSpec: at least one component required");
    }
    double total = 0.0;
    for (const auto &c : components_) {
        if (!(c.sigma > 0.0) || !std::isfinite(c.sigma)) {
            throw std::invalid_argument("TargetSpec: sigma must be positive");
        }
        if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
            throw std::invalid_argument("TargetSpec: weight must be positive");
        }
        if (!std::isfinite(c.mean)) {
            throw std::invalid_argument("TargetSpec: mean must be finite");
        }
    }
    // Canonical order makes the mixture sum independent of how the caller
    // listed the components.
    std::sort(components_.begin(), components_.end(), [](const auto &a, const auto &b) {
        return std::tie(a.mean, a.sigma, a.weight) < std::tie(b.mean, b.sigma, b.weight);
    });
    for (const auto &c : components_) {
        total += c.weight;
    }
    for (auto &c : components_) {
        c.weight /= total;
    }
}

double TargetSpec::density(double x) const {
    double f = 0.0;
    for (const auto &c : components_) {
        const double z = (x - c.mean) / c.sigma;
        f += c.weight * std::exp(-0.5 * z * z) /
             (c.sigma * std::sqrt(2.0 * std::numbers::pi));
    }
    return f;
}

std::string TargetSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) {
            os << '+';
        }
        os << components_[i].weight << "*N(" << components_[i].mean << ';'
           << components_[i].sigma << ')';
    }
    return os.str();
}

ExpectedDistribution ExpectedDistribution::from_probabilities(std::vector<double> probs) {
    if (probs.empty()) {
        throw std::invalid_argument("ExpectedDistribution: empty probability vector");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || !(p > 0.0)) {
            throw std::invalid_argument("ExpectedDistribution: entries must be finite and > 0");
        }
        total += p;
    }
    for (double &p : probs) {
        p /= total;
    }
    return ExpectedDistribution(std::move(probs));
}

ExpectedDistribution ExpectedDistribution::uniform(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ExpectedDistribution: empty probability vector");
    }
    return ExpectedDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ExpectedDistribution discretize_target(const TargetSpec &spec) {
    const Grid &grid = spec.grid();
    std::vector<double> values(grid.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = spec.density(grid.real_of_index(i));
        peak = std::max(peak, values[i]);
    }
    if (!(peak > 0.0)) {
        throw std::invalid_argument("discretize_target: density is zero on every grid node");
    }
    const double floor = kDensityFloor * peak;
    for (double &v : values) {
        v = std::max(v, floor);
    }
    return ExpectedDistribution::from_probabilities(std::move(values));
}

namespace {

class MixtureParser {
  public:
    explicit MixtureParser(const std::string &text) : text_(text) {}

    std::vector<GaussianComponent> parse() {
        std::vector<GaussianComponent> out;
        skip_space();
        do {
            out.push_back(term());
            skip_space();
        } while (accept('+'));
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return out;
    }

  private:
    GaussianComponent term() {
        GaussianComponent c;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] != 'N' && text_[pos_] != 'n') {
            c.weight = number();
            skip_space();
            expect('*');
            skip_space();
        }
        if (!accept('N') && !accept('n')) {
            fail("expected 'N('");
        }
        expect('(');
        c.mean = number();
        skip_space();
        if (!accept(',') && !accept(';')) {
            fail("expected ',' or ';' between mean and sigma");
        }
        c.sigma = number();
        skip_space();
        expect(')');
        return c;
    }

    double number() {
        skip_space();
        const char *begin = text_.c_str() + pos_;
        char *end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) {
            fail("expected a number");
        }
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("target \"" + text_ + "\": " + what + " at column " +
                                    std::to_string(pos_ + 1));
    }

    const std::string &text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<GaussianComponent> parse_mixture(const std::string &text) {
    return MixtureParser(text).parse();
}

} // namespace qmcmc
