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

#include "qmcmc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

namespace qmcmc::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::scalar, &scalar::dual_accumulate, &scalar::squared_norm};

#if defined(QMCMC_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Isa::avx2, &avx2::dual_accumulate, &avx2::squared_norm};
#endif

#if defined(QMCMC_HAVE_NEON_KERNELS)
constexpr KernelTable kNeonTable{Isa::neon, &neon::dual_accumulate, &neon::squared_norm};
#endif

const KernelTable *initial_table() {
    select_default();
    return nullptr;
}

std::atomic<const KernelTable *> g_active{nullptr};

} // namespace

std::string_view name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(QMCMC_HAVE_AVX2_KERNELS)
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::neon:
#if defined(QMCMC_HAVE_NEON_KERNELS)
        return true;
#else
        return false;
#endif
    }
    return false;
}

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (supported(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa detect() noexcept {
    if (supported(Isa::avx2)) {
        return Isa::avx2;
    }
    if (supported(Isa::neon)) {
        return Isa::neon;
    }
    return Isa::scalar;
}

const KernelTable &table(Isa isa) {
    if (!supported(isa)) {
        throw std::invalid_argument("kernels: ISA '" + std::string(name(isa)) +
                                    "' is not available on this machine");
    }
    switch (isa) {
#if defined(QMCMC_HAVE_AVX2_KERNELS)
    case Isa::avx2:
        return kAvx2Table;
#endif
#if defined(QMCMC_HAVE_NEON_KERNELS)
    case Isa::neon:
        return kNeonTable;
#endif
    default:
        return kScalarTable;
    }
}

const KernelTable &active() noexcept {
    const KernelTable *t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        static const KernelTable *once = initial_table();
        (void)once;
        t = g_active.load(std::memory_order_acquire);
    }
    return *t;
}

void select(Isa isa) { g_active.store(&table(isa), std::memory_order_release); }

void select_default() {
    Isa choice = detect();
    if (const char *env = std::getenv("QMCMC_KERNELS"); env != nullptr && *env != '\0') {
        const std::string wanted(env);
        bool matched = false;
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (wanted == name(isa)) {
                matched = true;
                if (supported(isa)) {
                    choice = isa;
                } else {
                    std::clog << "qmcmc: QMCMC_KERNELS=" << wanted
                              << " not supported here, using " << name(choice) << '\n';
                }
            }
        }
        if (!matched) {
            std::clog << "qmcmc: ignoring unknown QMCMC_KERNELS=" << wanted << '\n';
        }
    }
    g_active.store(&table(choice), std::memory_order_release);
}

} // namespace qmcmc::kernels
