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
#include "qmcmc/engine.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace qmcmc;
using Catch::Approx;

namespace {

using Matrix = std::vector<std::complex<double>>;

Matrix multiply(const Matrix &a, const Matrix &b, std::size_t n) {
    Matrix c(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto aik = a[i * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

Matrix dagger(const Matrix &a, std::size_t n) {
    Matrix d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[j * n + i] = std::conj(a[i * n + j]);
        }
    }
    return d;
}

Matrix dense_channel(const Matrix &rho, const KrausSet &kraus) {
    const std::size_t n = kraus.positions();
    Matrix out(n * n);
    for (std::size_t a = 0; a < kraus.actions(); ++a) {
        for (const Matrix &op : {kraus.reject_operator(a), kraus.accept_operator(a)}) {
            const Matrix term = multiply(multiply(op, rho, n), dagger(op, n), n);
            for (std::size_t i = 0; i < n * n; ++i) {
                out[i] += term[i];
            }
        }
    }
    return out;
}

ExpectedDistribution random_pi(std::mt19937_64 &gen, std::size_t n) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> p(n);
    for (double &v : p) {
        v = u(gen);
    }
    return ExpectedDistribution::from_probabilities(std::move(p));
}

ExpectedDistribution standard_normal(int n_x) {
    return discretize_target(TargetSpec({{1.0, 0.0, 1.0}}, Grid(n_x, -5, 5)));
}

} // namespace

TEST_CASE("action offsets skip zero and are symmetric", "[engine]") {
    CHECK(offset_of_action(0, 1) == -1);
    CHECK(offset_of_action(1, 1) == 1);
    const std::vector<int> two{-2, -1, 1, 2};
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(offset_of_action(a, 2) == two[a]);
    }
    CHECK(offset_of_action(0, 3) == -4);
    CHECK(offset_of_action(7, 3) == 4);
    for (int n_a = 1; n_a <= 10; ++n_a) {
        std::set<int> seen;
        const std::size_t count = std::size_t{1} << n_a;
        for (std::size_t a = 0; a < count; ++a) {
            const int d = offset_of_action(a, n_a);
            CHECK(d != 0);
            CHECK(std::abs(d) <= static_cast<int>(count / 2));
            seen.insert(d);
        }
        CHECK(seen.size() == count);
        for (int d : seen) {
            CHECK(seen.count(-d) == 1);
        }
    }
    CHECK_THROWS_AS(offset_of_action(2, 1), std::domain_error);
    CHECK_THROWS_AS(offset_of_action(0, 0), std::domain_error);
}

TEST_CASE("acceptance ratio, discretization and coin probabilities", "[engine]") {
    const auto pi = ExpectedDistribution::from_probabilities({1.0, 2.0, 4.0, 1.0});
    CHECK(acceptance_ratio(pi, 0, 1) == 1.0);
    CHECK(acceptance_ratio(pi, 2, 1) == 0.5);
    CHECK(acceptance_ratio(pi, 2, 3) == 0.25);
    CHECK_THROWS_AS(acceptance_ratio(pi, 0, 4), std::domain_error);

    CHECK(disc_index(1.0, 4) == 3);
    CHECK(disc_index(0.5, 4) == 1);
    CHECK(disc_index(0.999999, 4) == 2);
    CHECK(disc_index(1e-9, 4) == 0);
    CHECK(disc_index(0.1, 16) == 1);
    CHECK(disc_index(0.5, 2) == 0);
    CHECK_THROWS_AS(disc_index(0.0, 4), std::domain_error);
    CHECK_THROWS_AS(disc_index(0.5, 1), std::domain_error);

    CHECK(coin_prob(3, 4) == 1.0);
    CHECK(coin_prob(0, 4) == Approx(1.0 / 6.0));
    CHECK(coin_prob(1, 4) == 0.5);
    CHECK(coin_prob(2, 4) == Approx(5.0 / 6.0));
    CHECK_THROWS_AS(coin_prob(4, 4), std::domain_error);

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    for (std::size_t m : {2u, 4u, 16u, 512u}) {
        for (int i = 0; i < 1000; ++i) {
            const double acc = u(gen);
            const std::size_t idx = disc_index(acc, m);
            REQUIRE(idx < m - 1);
            const double p = coin_prob(idx, m);
            CHECK(std::abs(p - acc) <= 1.0 / static_cast<double>(m - 1));
        }
    }
}

TEST_CASE("CircuitConfig validation", "[engine]") {
    CircuitConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_a = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.n_x = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.n_x = kMaxChannelQubits + 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.n_acc = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("build_kraus examples", "[engine]") {
    SECTION("uniform target accepts every move with certainty") {
        CircuitConfig cfg;
        cfg.n_x = 4;
        cfg.n_a = 2;
        const auto kraus = build_kraus(cfg, ExpectedDistribution::uniform(16));
        for (std::size_t a = 0; a < kraus.actions(); ++a) {
            for (std::size_t x = 0; x < 16; ++x) {
                CHECK(kraus.reject(a)[x] == 0.0);
                CHECK(kraus.accept(a)[x] == 1.0);
            }
        }
        CHECK(kraus.scale() == 0.5);
    }
    SECTION("standard normal on eight nodes") {
        CircuitConfig cfg;
        cfg.n_x = 3;
        cfg.n_a = 1;
        cfg.n_acc = 2;
        const auto kraus = build_kraus(cfg, standard_normal(3));
        // Frozen from an independent NumPy evaluation.
        const double s = 1.0 / 6.0;
        const std::vector<std::vector<double>> accept_prob{
            {1, s, s, s, 1, 1, 1, 1},
            {1, 1, 1, 1, s, s, s, 1},
        };
        REQUIRE(kraus.actions() == 2);
        CHECK(kraus.offset(0) == -1);
        CHECK(kraus.offset(1) == 1);
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t x = 0; x < 8; ++x) {
                INFO("a=" << a << " x=" << x);
                const double sn = kraus.accept(a)[x];
                const double cs = kraus.reject(a)[x];
                CHECK(sn * sn == Approx(accept_prob[a][x]).epsilon(1e-14));
                CHECK(cs * cs + sn * sn == Approx(1.0).epsilon(1e-15));
            }
        }
        CHECK(kraus.target_of(0, 0) == 7);
        CHECK(kraus.target_of(7, 1) == 0);
    }
    SECTION("size mismatch") {
        CircuitConfig cfg;
        CHECK_THROWS_AS(build_kraus(cfg, ExpectedDistribution::uniform(8)), std::domain_error);
    }
}

TEST_CASE("Kraus sets are complete with one move per column", "[engine][property]") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> qubits(2, 7);
    for (int trial = 0; trial < 40; ++trial) {
        CircuitConfig cfg;
        cfg.n_x = qubits(gen);
        cfg.n_a = std::uniform_int_distribution<int>(1, cfg.n_x - 1)(gen);
        cfg.n_acc = std::uniform_int_distribution<int>(1, 9)(gen);
        const std::size_t n = cfg.positions();
        const auto kraus = build_kraus(cfg, random_pi(gen, n));
        CHECK(kraus.completeness_deviation() <= 1e-12);

        // sum_k K^dagger K = I as dense matrices.
        Matrix sum(n * n);
        for (std::size_t a = 0; a < kraus.actions(); ++a) {
            for (const Matrix &op : {kraus.reject_operator(a), kraus.accept_operator(a)}) {
                const Matrix term = multiply(dagger(op, n), op, n);
                for (std::size_t i = 0; i < n * n; ++i) {
                    sum[i] += term[i];
                }
            }
            const Matrix acc = kraus.accept_operator(a);
            for (std::size_t col = 0; col < n; ++col) {
                int nonzero = 0;
                for (std::size_t row = 0; row < n; ++row) {
                    nonzero += acc[row * n + col] != 0.0 ? 1 : 0;
                }
                CHECK(nonzero == 1);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::abs(sum[i * n + j] - want) <= 1e-12);
            }
        }
    }
}

TEST_CASE("channel_step equals the dense Kraus sum", "[engine]") {
    std::mt19937_64 gen(5);
    for (int n_x : {2, 3, 4, 5}) {
        for (int n_a = 1; n_a < n_x; ++n_a) {
            CircuitConfig cfg;
            cfg.n_x = n_x;
            cfg.n_a = n_a;
            cfg.n_acc = 3;
            const std::size_t n = cfg.positions();
            const auto kraus = build_kraus(cfg, random_pi(gen, n));
            DensityState rho = DensityState::uniform_superposition(n);
            for (int step = 0; step < 3; ++step) {
                const Matrix want(rho.entries().begin(), rho.entries().end());
                const Matrix dense = dense_channel(want, kraus);
                rho = channel_step(rho, kraus);
                for (std::size_t i = 0; i < n * n; ++i) {
                    CHECK(std::abs(rho.entries()[i] - dense[i]) <= 1e-14);
                }
            }
        }
    }
    DensityState wrong(4);
    CircuitConfig cfg;
    CHECK_THROWS_AS(channel_step(wrong, build_kraus(cfg, ExpectedDistribution::uniform(16))),
                    std::domain_error);
}

TEST_CASE("channel invariants", "[engine][property]") {
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<int> qubits(2, 6);

    SECTION("uniform target keeps the uniform state fixed") {
        for (int trial = 0; trial < 10; ++trial) {
            CircuitConfig cfg;
            cfg.n_x = qubits(gen);
            cfg.n_a = std::uniform_int_distribution<int>(1, cfg.n_x - 1)(gen);
            cfg.n_acc = std::uniform_int_distribution<int>(2, 8)(gen);
            cfg.max_iters = 50;
            const std::size_t n = cfg.positions();
            const auto kraus = build_kraus(cfg, ExpectedDistribution::uniform(n));
            DensityState rho = DensityState::uniform_superposition(n);
            for (int t = 0; t < 25; ++t) {
                rho = channel_step(rho, kraus);
                for (double p : rho.diagonal()) {
                    CHECK(std::abs(p - 1.0 / static_cast<double>(n)) <= 1e-12);
                }
            }
            const auto report = run_qmcmc(cfg, ExpectedDistribution::uniform(n));
            CHECK(report.converged_iter == 1u);
            CHECK(report.final_tv_to_expected() <= 1e-12);
        }
    }
    SECTION("trace, hermiticity and positivity survive many steps") {
        for (int trial = 0; trial < 10; ++trial) {
            CircuitConfig cfg;
            cfg.n_x = qubits(gen);
            cfg.n_a = std::uniform_int_distribution<int>(1, cfg.n_x - 1)(gen);
            cfg.n_acc = std::uniform_int_distribution<int>(1, 8)(gen);
            const std::size_t n = cfg.positions();
            const auto kraus = build_kraus(cfg, random_pi(gen, n));
            DensityState rho = DensityState::uniform_superposition(n);
            for (int t = 0; t < 200; ++t) {
                rho = channel_step(rho, kraus);
            }
            const auto d = rho.diagnostics();
            CHECK(d.valid());
            CHECK(d.trace_deviation <= 1e-12);
        }
    }
    SECTION("a mirror-symmetric target gives mirror-symmetric marginals") {
        for (int trial = 0; trial < 10; ++trial) {
            CircuitConfig cfg;
            cfg.n_x = qubits(gen);
            cfg.n_a = std::uniform_int_distribution<int>(1, cfg.n_x - 1)(gen);
            cfg.n_acc = std::uniform_int_distribution<int>(1, 8)(gen);
            cfg.max_iters = 60;
            const std::size_t n = cfg.positions();
            const auto base = random_pi(gen, n);
            std::vector<double> sym(n);
            for (std::size_t x = 0; x < n; ++x) {
                sym[x] = base[x] + base[n - 1 - x];
            }
            const auto report =
                run_qmcmc(cfg, ExpectedDistribution::from_probabilities(std::move(sym)));
            for (const auto &dist : report.distributions) {
                for (std::size_t x = 0; x < n; ++x) {
                    CHECK(std::abs(dist[x] - dist[n - 1 - x]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("run_qmcmc on a standard normal", "[engine]") {
    CircuitConfig cfg;
    cfg.n_x = 4;
    cfg.n_a = 1;
    cfg.n_acc = 4;
    const TargetSpec spec({{1.0, 0.0, 1.0}}, Grid(4, -5, 5));
    const auto report = run_qmcmc(cfg, spec);
    REQUIRE(report.converged());
    // Regression value reproduced by an independent NumPy model of the channel.
    CHECK(*report.converged_iter == 38);
    CHECK(report.iterations_run == 38);
    CHECK(report.final_tv_to_expected() == Approx(0.0132).margin(5e-4));
    CHECK(report.final_tv_to_expected() <= 0.05);
    CHECK(std::isinf(report.tv_series.front()));
    CHECK(report.tv_series.size() == 39);
    CHECK(report.tv_series.back() < cfg.epsilon);
    CHECK(report.qubit_cost_at_convergence == qubit_cost(1, 4, 4, 38));
    CHECK(report.worst.valid());
    CHECK(report.renormalizations == 0);
    CHECK(report.stored_iters.front() == 0);
    CHECK(report.stored_iters.back() == 38);
    const auto &fin = report.final_distribution;
    const auto peak = std::max_element(fin.begin(), fin.end()) - fin.begin();
    CHECK((peak == 7 || peak == 8));

    CircuitConfig capped = cfg;
    capped.max_iters = 5;
    const auto short_run = run_qmcmc(capped, spec);
    CHECK_FALSE(short_run.converged());
    CHECK(short_run.iterations_run == 5);
    CHECK(short_run.qubit_cost_at_convergence == qubit_cost(1, 4, 4, 5));

    CircuitConfig mismatched = cfg;
    mismatched.n_x = 5;
    CHECK_THROWS_AS(run_qmcmc(mismatched, spec), std::domain_error);
}

TEST_CASE("finer acceptance discretization approximates the target better", "[engine]") {
    CircuitConfig coarse;
    coarse.n_x = 5;
    coarse.n_a = 1;
    coarse.n_acc = 2;
    CircuitConfig fine = coarse;
    fine.n_acc = 5;
    const auto pi = standard_normal(5);
    const auto a = run_qmcmc(coarse, pi);
    const auto b = run_qmcmc(fine, pi);
    REQUIRE(a.converged());
    REQUIRE(b.converged());
    CHECK(b.final_tv_to_expected() < a.final_tv_to_expected());
    CHECK(b.final_tv_to_expected() <= 0.05);
}

TEST_CASE("stored snapshots", "[engine]") {
    CircuitConfig cfg;
    cfg.n_x = 3;
    cfg.n_a = 1;
    cfg.n_acc = 3;
    cfg.epsilon = 1e-300;
    cfg.max_iters = 5000;
    const auto pi = standard_normal(3);

    const auto adaptive = run_qmcmc(cfg, pi);
    const auto &iters = adaptive.stored_iters;
    CHECK(iters.size() <= kMaxStoredIters + 1);
    CHECK(iters.size() >= kMaxStoredIters / 2);
    CHECK(iters.front() == 0);
    CHECK(iters.back() == 5000);
    const std::size_t step = iters[1] - iters[0];
    for (std::size_t i = 1; i + 1 < iters.size(); ++i) {
        CHECK(iters[i] - iters[i - 1] == step);
    }
    for (const auto &d : adaptive.distributions) {
        double total = 0.0;
        for (double v : d) {
            total += v;
        }
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }

    cfg.max_iters = 700;
    const auto every = run_qmcmc(cfg, pi);
    CHECK(every.stored_iters.size() == 701);

    RunOptions fixed;
    fixed.store_stride = 300;
    const auto strided = run_qmcmc(cfg, pi, fixed);
    CHECK(strided.stored_iters == std::vector<std::size_t>{0, 300, 600, 700});
}
