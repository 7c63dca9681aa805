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

namespace qmcmc::kernels::scalar {

void dual_accumulate(double *out, const double *in0, const double *w0, double alpha0,
                     const double *in1, const double *w1, double alpha1, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        const double c0 = alpha0 * w0[j];
        const double c1 = alpha1 * w1[j];
        double re = out[2 * j];
        double im = out[2 * j + 1];
        re += c0 * in0[2 * j];
        im += c0 * in0[2 * j + 1];
        re += c1 * in1[2 * j];
        im += c1 * in1[2 * j + 1];
        out[2 * j] = re;
        out[2 * j + 1] = im;
    }
}

double squared_norm(const double *data, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        acc += data[k] * data[k];
    }
    return acc;
}

} // namespace qmcmc::kernels::scalar
