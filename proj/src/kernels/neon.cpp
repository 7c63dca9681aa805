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

#include <arm_neon.h>

namespace qmcmc::kernels::neon {

void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n) {
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t lo = vld1q_f64(out + 2 * j);
        float64x2_t hi = vld1q_f64(out + 2 * j + 2);
        lo = vfmaq_n_f64(lo, vld1q_f64(in0 + 2 * j), alpha0 * w0[j]);
        hi = vfmaq_n_f64(hi, vld1q_f64(in0 + 2 * j + 2), alpha0 * w0[j + 1]);
        lo = vfmaq_n_f64(lo, vld1q_f64(in1 + 2 * j), alpha1 * w1[j]);
        hi = vfmaq_n_f64(hi, vld1q_f64(in1 + 2 * j + 2), alpha1 * w1[j + 1]);
        vst1q_f64(out + 2 * j, lo);
        vst1q_f64(out + 2 * j + 2, hi);
    }
    if (j < n) {
        float64x2_t acc = vld1q_f64(out + 2 * j);
        acc = vfmaq_n_f64(acc, vld1q_f64(in0 + 2 * j), alpha0 * w0[j]);
        acc = vfmaq_n_f64(acc, vld1q_f64(in1 + 2 * j), alpha1 * w1[j]);
        vst1q_f64(out + 2 * j, acc);
    }
}

double squared_norm(const double *data, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t x0 = vld1q_f64(data + 2 * j);
        const float64x2_t x1 = vld1q_f64(data + 2 * j + 2);
        acc0 = vfmaq_f64(acc0, x0, x0);
        acc1 = vfmaq_f64(acc1, x1, x1);
    }
    if (j < n) {
        const float64x2_t x0 = vld1q_f64(data + 2 * j);
        acc0 = vfmaq_f64(acc0, x0, x0);
    }
    return vaddvq_f64(vaddq_f64(acc0, acc1));
}

} // namespace qmcmc::kernels::neon
