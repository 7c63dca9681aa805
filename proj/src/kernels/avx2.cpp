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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a runtime CPU check.

#include "qmcmc/kernels.hpp"

#include <immintrin.h>

namespace qmcmc::kernels::avx2 {

namespace {

// [w[0], w[0], w[1], w[1]]: one real weight per complex lane pair.
inline __m256d load_weight_pair(const double *w) {
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w)), 0x50);
}

} // namespace

void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n) {
    const __m256d a0 = _mm256_set1_pd(alpha0);
    const __m256d a1 = _mm256_set1_pd(alpha1);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d c0_lo = _mm256_mul_pd(a0, load_weight_pair(w0 + j));
        const __m256d c0_hi = _mm256_mul_pd(a0, load_weight_pair(w0 + j + 2));
        const __m256d c1_lo = _mm256_mul_pd(a1, load_weight_pair(w1 + j));
        const __m256d c1_hi = _mm256_mul_pd(a1, load_weight_pair(w1 + j + 2));
        __m256d lo = _mm256_loadu_pd(out + 2 * j);
        __m256d hi = _mm256_loadu_pd(out + 2 * j + 4);
        lo = _mm256_fmadd_pd(c0_lo, _mm256_loadu_pd(in0 + 2 * j), lo);
        hi = _mm256_fmadd_pd(c0_hi, _mm256_loadu_pd(in0 + 2 * j + 4), hi);
        lo = _mm256_fmadd_pd(c1_lo, _mm256_loadu_pd(in1 + 2 * j), lo);
        hi = _mm256_fmadd_pd(c1_hi, _mm256_loadu_pd(in1 + 2 * j + 4), hi);
        _mm256_storeu_pd(out + 2 * j, lo);
        _mm256_storeu_pd(out + 2 * j + 4, hi);
    }
    for (; j + 2 <= n; j += 2) {
        const __m256d c0 = _mm256_mul_pd(a0, load_weight_pair(w0 + j));
        const __m256d c1 = _mm256_mul_pd(a1, load_weight_pair(w1 + j));
        __m256d acc = _mm256_loadu_pd(out + 2 * j);
        acc = _mm256_fmadd_pd(c0, _mm256_loadu_pd(in0 + 2 * j), acc);
        acc = _mm256_fmadd_pd(c1, _mm256_loadu_pd(in1 + 2 * j), acc);
        _mm256_storeu_pd(out + 2 * j, acc);
    }
    if (j < n) {
        const __m128d c0 = _mm_set1_pd(alpha0 * w0[j]);
        const __m128d c1 = _mm_set1_pd(alpha1 * w1[j]);
        __m128d acc = _mm_loadu_pd(out + 2 * j);
        acc = _mm_fmadd_pd(c0, _mm_loadu_pd(in0 + 2 * j), acc);
        acc = _mm_fmadd_pd(c1, _mm_loadu_pd(in1 + 2 * j), acc);
        _mm_storeu_pd(out + 2 * j, acc);
    }
}

double squared_norm(const double *data, std::size_t n) {
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        const __m256d x0 = _mm256_loadu_pd(data + k);
        const __m256d x1 = _mm256_loadu_pd(data + k + 4);
        acc0 = _mm256_fmadd_pd(x0, x0, acc0);
        acc1 = _mm256_fmadd_pd(x1, x1, acc1);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < len; ++k) {
        total += data[k] * data[k];
    }
    return total;
}

} // namespace qmcmc::kernels::avx2
