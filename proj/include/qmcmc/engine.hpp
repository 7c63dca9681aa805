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
 * The quantum-walk MCMC circuit evaluated as a quantum channel on the
 * position register.
 *
 * One circuit iteration (Hadamard on a fresh action register, TRIAL, DISC,
 * the controlled coin group, DISC^dagger, TRIAL^dagger, coin-controlled SHIFT)
 * followed by discarding the action and coin registers is the channel
 *
 *   rho' = sum_a K_{a,0} rho K_{a,0}^dagger + K_{a,1} rho K_{a,1}^dagger
 *   K_{a,0} = |A|^{-1/2} diag_x(cos theta_{x,a})              (reject)
 *   K_{a,1} = |A|^{-1/2} Shift_{delta(a)} diag_x(sin theta_{x,a})  (accept)
 *
 * where sin^2 theta_{x,a} is the coin acceptance probability for the move
 * x -> (x + delta(a)) mod N. Position arithmetic is cyclic.
 */

#pragma once

#include "qmcmc/target.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmcmc {

enum class Boundary { cyclic };

struct CircuitConfig {
    int n_x = 4;
    int n_a = 1;
    int n_acc = 4;
    double epsilon = 1e-4;
    std::size_t max_iters = 100000;
    Boundary boundary = Boundary::cyclic;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    [[nodiscard]] std::size_t positions() const { return std::size_t{1} << n_x; }
    [[nodiscard]] std::size_t actions() const { return std::size_t{1} << n_a; }
    [[nodiscard]] std::size_t intervals() const { return std::size_t{1} << n_acc; }
};

/// Largest position register the dense channel engine accepts.
inline constexpr int kMaxChannelQubits = 12;

/// Signed move encoded by action label a: a + [a >= |A|/2] - |A|/2. Never 0.
[[nodiscard]] int offset_of_action(std::size_t a, int n_a);

/// min(1, pi[t] / pi[x]).
[[nodiscard]] double acceptance_ratio(const ExpectedDistribution &pi, std::size_t x,
                                      std::size_t t);

/// Interval index of an acceptance probability: M-1 when A >= 1, otherwise
/// floor(A (M-1)), i.e. M-1 equal intervals on [0, 1) plus a top index.
[[nodiscard]] std::size_t disc_index(double acceptance, std::size_t intervals);

/// Representative acceptance probability of an interval: its midpoint, or 1
/// for the top index (the coin gate is then an X).
[[nodiscard]] double coin_prob(std::size_t index, std::size_t intervals);

/**
 * Per-action Kraus data. For action a, reject(a)[x] = cos theta_{x,a} and
 * accept(a)[x] = sin theta_{x,a}; both operators carry the common factor
 * scale() = |A|^{-1/2}.
 */
class KrausSet {
  public:
    KrausSet(std::size_t positions, std::vector<int> offsets, std::vector<double> reject,
             std::vector<double> accept);

    [[nodiscard]] std::size_t positions() const noexcept { return positions_; }
    [[nodiscard]] std::size_t actions() const noexcept { return offsets_.size(); }
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] int offset(std::size_t a) const { return offsets_.at(a); }
    [[nodiscard]] std::span<const double> reject(std::size_t a) const;
    [[nodiscard]] std::span<const double> accept(std::size_t a) const;

    /// Destination of an accepted move from x under action a.
    [[nodiscard]] std::size_t target_of(std::size_t x, std::size_t a) const;

    /// max_x |sum_a scale^2 (cos^2 + sin^2) - 1|, i.e. max |sum K^dagger K - I|.
    [[nodiscard]] double completeness_deviation() const;

    /// Dense matrices, for tests and small-N inspection.
    [[nodiscard]] std::vector<std::complex<double>> reject_operator(std::size_t a) const;
    [[nodiscard]] std::vector<std::complex<double>> accept_operator(std::size_t a) const;

  private:
    std::size_t positions_;
    std::vector<int> offsets_;
    std::vector<double> reject_;
    std::vector<double> accept_;
    double scale_;
};

/// Throws std::domain_error if pi does not have 2^n_x entries.
[[nodiscard]] KrausSet build_kraus(const CircuitConfig &config, const ExpectedDistribution &pi);

struct DensityDiagnostics {
    double trace_deviation = 0.0;       ///< |tr rho - 1|
    double hermiticity_deviation = 0.0; ///< max |rho_ij - conj(rho_ji)|
    double min_diagonal = 0.0;          ///< min Re rho_ii
    double max_diagonal_imag = 0.0;     ///< max |Im rho_ii|

    [[nodiscard]] bool valid() const {
        return trace_deviation <= 1e-10 && hermiticity_deviation <= 1e-10 &&
               min_diagonal >= -1e-12 && max_diagonal_imag <= 1e-10;
    }
};

/// N x N density matrix of the position register, row-major.
class DensityState {
  public:
    explicit DensityState(std::size_t n);
    DensityState(std::size_t n, std::vector<std::complex<double>> entries);

    /// |u><u| with |u> the equal superposition of all N states.
    static DensityState uniform_superposition(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::complex<double> &operator()(std::size_t r, std::size_t c) {
        return entries_[r * n_ + c];
    }
    [[nodiscard]] const std::complex<double> &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * n_ + c];
    }
    [[nodiscard]] std::span<const std::complex<double>> entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::span<std::complex<double>> entries() noexcept { return entries_; }

    [[nodiscard]] std::complex<double> trace() const;
    /// Real part of the diagonal: the position distribution.
    [[nodiscard]] std::vector<double> diagonal() const;
    [[nodiscard]] DensityDiagnostics diagnostics() const;

    /// Divides by the trace.
    void renormalize();

  private:
    std::size_t n_;
    std::vector<std::complex<double>> entries_;
};

/// One circuit iteration. Writes into out (resized as needed). Rows are
/// accumulated in ascending action order, reject before accept, so results
/// are bit-identical for any thread count.
void channel_step(const DensityState &rho, const KrausSet &kraus, DensityState &out);
[[nodiscard]] DensityState channel_step(const DensityState &rho, const KrausSet &kraus);

struct RunOptions {
    /// Store P_t for t % store_stride == 0 (the last iteration is always
    /// stored). 0 stores every iteration until kMaxStoredIters is reached,
    /// then repeatedly halves the snapshots, keeping a uniform subsample.
    std::size_t store_stride = 0;
};

struct ConvergenceReport {
    CircuitConfig config;
    std::vector<double> expected;

    std::vector<std::size_t> stored_iters;
    std::vector<std::vector<double>> distributions;

    /// tv_series[t] = TV(P_t, P_{t-1}); tv_series[0] is +inf.
    std::vector<double> tv_series;
    /// tv_to_expected_series[t] = TV(P_t, expected).
    std::vector<double> tv_to_expected_series;

    std::optional<std::size_t> converged_iter;
    std::size_t iterations_run = 0;
    std::vector<double> final_distribution;
    std::uint64_t qubit_cost_at_convergence = 0;

    double kraus_completeness_deviation = 0.0;
    DensityDiagnostics worst;
    std::size_t renormalizations = 0;
    std::string kernel;

    [[nodiscard]] bool converged() const { return converged_iter.has_value(); }
    [[nodiscard]] double final_tv_to_expected() const { return tv_to_expected_series.back(); }
};

inline constexpr std::size_t kMaxStoredIters = 1000;

/**
 * Runs the channel from |u><u| until TV(P_t, P_{t-1}) < epsilon or max_iters.
 * Non-convergence is reported, not thrown. Throws std::logic_error if a
 * density-state invariant is violated.
 */
[[nodiscard]] ConvergenceReport run_qmcmc(const CircuitConfig &config,
                                          const ExpectedDistribution &pi,
                                          const RunOptions &options = {});
[[nodiscard]] ConvergenceReport run_qmcmc(const CircuitConfig &config, const TargetSpec &spec,
                                          const RunOptions &options = {});

} // namespace qmcmc
