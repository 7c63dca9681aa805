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

#include "qmcmc/engine.hpp"
#include "qmcmc/kernels.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qmcmc;
namespace k = qmcmc::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64 &gen, std::size_t len, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(len);
    for (double &x : v) {
        x = u(gen);
    }
    return v;
}

struct IsaGuard {
    k::Isa saved = k::active().isa;
    ~IsaGuard() { k::select(saved); }
};

DensityState random_density(std::mt19937_64 &gen, std::size_t n) {
    // rho = B B^dagger / tr, which is Hermitian and positive semidefinite.
    const auto re = random_vector(gen, n * n, -1.0, 1.0);
    const auto im = random_vector(gen, n * n, -1.0, 1.0);
    std::vector<std::complex<double>> b(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        b[i] = {re[i], im[i]};
    }
    std::vector<std::complex<double>> m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::complex<double> s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s += b[r * n + j] * std::conj(b[c * n + j]);
            }
            m[r * n + c] = s;
        }
    }
    DensityState rho(n, std::move(m));
    rho.renormalize();
    return rho;
}

} // namespace

TEST_CASE("scalar kernel matches its definition", "[kernels]") {
    std::mt19937_64 gen(1);
    const std::size_t n = 9;
    auto out = random_vector(gen, 2 * n, -1, 1);
    const auto in0 = random_vector(gen, 2 * n, -1, 1);
    const auto in1 = random_vector(gen, 2 * n, -1, 1);
    const auto w0 = random_vector(gen, n, 0, 1);
    const auto w1 = random_vector(gen, n, 0, 1);
    auto expected = out;
    for (std::size_t j = 0; j < n; ++j) {
        for (int part = 0; part < 2; ++part) {
            expected[2 * j + part] += (0.25 * w0[j]) * in0[2 * j + part];
            expected[2 * j + part] += (0.75 * w1[j]) * in1[2 * j + part];
        }
    }
    k::scalar::dual_accumulate(out.data(), in0.data(), w0.data(), 0.25, in1.data(), w1.data(),
                               0.75, n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        CHECK(out[i] == expected[i]);
    }
    double norm = 0.0;
    for (double v : in0) {
        norm += v * v;
    }
    CHECK(k::scalar::squared_norm(in0.data(), n) == Catch::Approx(norm).epsilon(1e-15));
    CHECK(k::scalar::squared_norm(in0.data(), 0) == 0.0);
}

TEST_CASE("vector kernels agree with the scalar reference", "[kernels][property]") {
    std::mt19937_64 gen(42);
    for (k::Isa isa : k::available()) {
        if (isa == k::Isa::scalar) {
            continue;
        }
        INFO("isa " << k::name(isa));
        const auto &vec = k::table(isa);
        CHECK(vec.isa == isa);
        for (std::size_t n = 0; n <= 67; ++n) {
            const auto out0 = random_vector(gen, 2 * n, -1, 1);
            const auto in0 = random_vector(gen, 2 * n, -1, 1);
            const auto in1 = random_vector(gen, 2 * n, -1, 1);
            const auto w0 = random_vector(gen, n, 0, 1);
            const auto w1 = random_vector(gen, n, 0, 1);
            auto a = out0;
            auto b = out0;
            k::scalar::dual_accumulate(a.data(), in0.data(), w0.data(), 0.3, in1.data(),
                                       w1.data(), 0.6, n);
            vec.dual_accumulate(b.data(), in0.data(), w0.data(), 0.3, in1.data(), w1.data(), 0.6,
                                n);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                CHECK(std::abs(a[i] - b[i]) <= 4e-16 * (1.0 + std::abs(a[i])));
            }
            const double ns = k::scalar::squared_norm(in0.data(), n);
            const double nv = vec.squared_norm(in0.data(), n);
            CHECK(std::abs(ns - nv) <= 1e-14 * (1.0 + ns));
        }
    }
}

TEST_CASE("kernel selection", "[kernels]") {
    IsaGuard guard;
    CHECK(k::supported(k::Isa::scalar));
    CHECK(k::name(k::Isa::avx2) == "avx2");
    k::select(k::Isa::scalar);
    CHECK(k::active().isa == k::Isa::scalar);
    for (k::Isa isa : {k::Isa::avx2, k::Isa::neon}) {
        if (!k::supported(isa)) {
            CHECK_THROWS_AS(k::select(isa), std::invalid_argument);
        }
    }
    CHECK(k::supported(k::detect()));
}

TEST_CASE("channel_step agrees across kernels and thread counts", "[kernels][property]") {
    IsaGuard guard;
    std::mt19937_64 gen(99);
    for (int n_x : {3, 6, 7}) {
        CircuitConfig cfg;
        cfg.n_x = n_x;
        cfg.n_a = n_x - 1;
        cfg.n_acc = 5;
        const std::size_t n = cfg.positions();
        const auto pi = ExpectedDistribution::from_probabilities(random_vector(gen, n, 0.01, 1));
        const auto kraus = build_kraus(cfg, pi);
        const auto rho = random_density(gen, n);

        k::select(k::Isa::scalar);
        const auto reference = channel_step(rho, kraus);

        for (k::Isa isa : k::available()) {
            k::select(isa);
            const auto once = channel_step(rho, kraus);
            for (std::size_t i = 0; i < n * n; ++i) {
                CHECK(std::abs(once.entries()[i] - reference.entries()[i]) <= 1e-14);
            }
#ifdef _OPENMP
            const int saved = omp_get_max_threads();
            for (int threads : {1, 2, 3, 4}) {
                omp_set_num_threads(threads);
                const auto again = channel_step(rho, kraus);
                for (std::size_t i = 0; i < n * n; ++i) {
                    REQUIRE(again.entries()[i] == once.entries()[i]);
                }
            }
            omp_set_num_threads(saved);
#endif
        }
    }
}
