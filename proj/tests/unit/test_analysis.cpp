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

#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace qmcmc;
using Catch::Approx;

TEST_CASE("tv_distance uses the unhalved convention", "[analysis]") {
    const std::vector<double> a{0.5, 0.5};
    const std::vector<double> b{1.0, 0.0};
    CHECK(tv_distance(a, a) == 0.0);
    CHECK(tv_distance(a, b) == Approx(1.0));
    CHECK(tv_distance(std::vector<double>{1.0, 0.0, 0.0}, std::vector<double>{0.0, 0.5, 0.5}) ==
          Approx(2.0));
    CHECK_THROWS_AS(tv_distance(a, std::vector<double>{1.0}), std::domain_error);
    CHECK_THROWS_AS(tv_distance(a, std::vector<double>{0.7, 0.7}), std::invalid_argument);
}

TEST_CASE("tv_distance is a bounded metric on random distributions", "[analysis][property]") {
    std::mt19937_64 gen(7);
    std::exponential_distribution<double> mass(1.0);
    std::uniform_int_distribution<std::size_t> length(1, 40);
    auto random_dist = [&](std::size_t n) {
        std::vector<double> d(n);
        double total = 0.0;
        for (double &v : d) {
            v = mass(gen);
            total += v;
        }
        for (double &v : d) {
            v /= total;
        }
        return d;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = length(gen);
        const auto p = random_dist(n);
        const auto q = random_dist(n);
        const auto r = random_dist(n);
        const double pq = tv_distance(p, q);
        CHECK(pq == tv_distance(q, p));
        CHECK(pq >= 0.0);
        CHECK(pq <= 2.0 + 1e-15);
        CHECK(pq <= tv_distance(p, r) + tv_distance(r, q) + 1e-15);
    }
}

TEST_CASE("detect_convergence", "[analysis]") {
    CHECK(detect_convergence(std::vector<double>{0.5, 0.2, 0.05, 0.01}, 0.1) == 2u);
    CHECK_FALSE(detect_convergence(std::vector<double>{0.5, 0.4}, 0.1).has_value());
    CHECK_FALSE(detect_convergence(std::vector<double>{}, 0.1).has_value());
    CHECK_THROWS_AS(detect_convergence(std::vector<double>{0.1}, 0.0), std::invalid_argument);
}

TEST_CASE("qubit_cost", "[analysis]") {
    CHECK(qubit_cost(1, 9, 9, 15000) == 30027u);
    CHECK(qubit_cost(9, 9, 9, 6) == 87u);
    CHECK(qubit_cost(8, 9, 9, 6) == 81u);
    CHECK(qubit_cost(3, 5, 4, 0) == 14u);
    for (std::uint64_t t = 0; t < 100; ++t) {
        CHECK(qubit_cost(2, 6, 3, t + 1) > qubit_cost(2, 6, 3, t));
    }
    const CostAccount account{1, 9, 9, 15000};
    CHECK(account.total_qubits() == 30027u);
}

TEST_CASE("sampling_cost", "[analysis]") {
    CHECK(sampling_cost(20, 0, 0, 5000).quantum_iters == 100000.0);
    CHECK(sampling_cost(0, 10000, 10, 9000).classical_iters == 100000.0);
    CHECK(sampling_cost(0, 0, 0, 123).quantum_iters == 0.0);
    CHECK(CostAccount{1, 4, 4, 20}.quantum_sampling_iters(5000) == 100000.0);
    CHECK(CostAccount::classical_sampling_iters(10000, 10, 9000) == 100000.0);
    CHECK_THROWS_AS(sampling_cost(-1, 0, 0, 1), std::invalid_argument);
}
