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
 * Inner-loop kernels on interleaved complex<double> data with real weights.
 *
 * Every kernel has a portable scalar reference implementation and, where the
 * target supports it, a vectorized variant (AVX2+FMA on x86-64, NEON on
 * AArch64). The active table is chosen at runtime from CPU features and can
 * be overridden with the QMCMC_KERNELS environment variable
 * (scalar | avx2 | neon) or select().
 */

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace qmcmc::kernels {

enum class Isa { scalar, avx2, neon };

/**
 * For j in [0, n), with out/in0/in1 holding n interleaved complex values:
 *   out[j] += (alpha0 * w0[j]) * in0[j];
 *   out[j] += (alpha1 * w1[j]) * in1[j];
 * in that order.
 */
using DualAccumulateFn = void (*)(double *out, const double *in0, const double *w0,
                                  double alpha0, const double *in1, const double *w1,
                                  double alpha1, std::size_t n);

/// Sum of |z|^2 over n interleaved complex values.
using SquaredNormFn = double (*)(const double *data, std::size_t n);

struct KernelTable {
    Isa isa;
    DualAccumulateFn dual_accumulate;
    SquaredNormFn squared_norm;
};

[[nodiscard]] std::string_view name(Isa isa) noexcept;

/// True if this build contains the variant and the running CPU supports it.
[[nodiscard]] bool supported(Isa isa) noexcept;

/// All ISAs usable on this machine, scalar first.
[[nodiscard]] std::vector<Isa> available();

/// Best supported ISA (ignores the environment override).
[[nodiscard]] Isa detect() noexcept;

/// Table for a specific ISA. Throws std::invalid_argument if unsupported.
[[nodiscard]] const KernelTable &table(Isa isa);

/// Table used by the engine.
[[nodiscard]] const KernelTable &active() noexcept;

/// Overrides the active table process-wide. Throws if unsupported.
void select(Isa isa);

/// Selects the table from QMCMC_KERNELS, falling back to detect().
void select_default();

namespace scalar {
void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n);
double squared_norm(const double *data, std::size_t n);
} // namespace scalar

namespace avx2 {
void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n);
double squared_norm(const double *data, std::size_t n);
} // namespace avx2

namespace neon {
void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n);
double squared_norm(const double *data, std::size_t n);
} // namespace neon

} // namespace qmcmc::kernels
