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

#include "qmcmc/analysis.hpp"
#include "qmcmc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

namespace qmcmc {

void CircuitConfig::validate() const {
    if (n_x < 2 || n_x > kMaxChannelQubits) {
        throw std::invalid_argument("CircuitConfig: n_x must be in [2, " +
                                    std::to_string(kMaxChannelQubits) + "], got " +
                                    std::to_string(n_x));
    }
    if (n_a < 1 || n_a > n_x - 1) {
        throw std::invalid_argument("CircuitConfig: n_a must be in [1, n_x - 1] = [1, " +
                                    std::to_string(n_x - 1) + "], got " + std::to_string(n_a));
    }
    if (n_acc < 1 || n_acc > 30) {
        throw std::invalid_argument("CircuitConfig: n_acc must be in [1, 30], got " +
                                    std::to_string(n_acc));
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("CircuitConfig: epsilon must be positive");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("CircuitConfig: max_iters must be at least 1");
    }
}

int offset_of_action(std::size_t a, int n_a) {
    if (n_a < 1 || n_a > 30) {
        throw std::domain_error("offset_of_action: n_a out of range");
    }
    const std::size_t count = std::size_t{1} << n_a;
    if (a >= count) {
        throw std::domain_error("offset_of_action: action " + std::to_string(a) +
                                " out of range for " + std::to_string(count) + " actions");
    }
    const auto half = static_cast<long long>(count / 2);
    const auto label = static_cast<long long>(a);
    return static_cast<int>(label + (label >= half ? 1 : 0) - half);
}

double acceptance_ratio(const ExpectedDistribution &pi, std::size_t x, std::size_t t) {
    if (x >= pi.size() || t >= pi.size()) {
        throw std::domain_error("acceptance_ratio: index out of range");
    }
    return std::min(1.0, pi[t] / pi[x]);
}

std::size_t disc_index(double acceptance, std::size_t intervals) {
    if (intervals < 2) {
        throw std::domain_error("disc_index: need at least 2 intervals");
    }
    if (!(acceptance > 0.0)) {
        throw std::domain_error("disc_index: acceptance must be positive");
    }
    if (acceptance >= 1.0) {
        return intervals - 1;
    }
    const auto idx =
        static_cast<std::size_t>(std::floor(acceptance * static_cast<double>(intervals - 1)));
    return std::min(idx, intervals - 2);
}

double coin_prob(std::size_t index, std::size_t intervals) {
    if (intervals < 2 || index >= intervals) {
        throw std::domain_error("coin_prob: interval index out of range");
    }
    if (index == intervals - 1) {
        return 1.0;
    }
    return (static_cast<double>(index) + 0.5) / static_cast<double>(intervals - 1);
}

KrausSet::KrausSet(std::size_t positions, std::vector<int> offsets, std::vector<double> reject,
                   std::vector<double> accept)
    : positions_(positions), offsets_(std::move(offsets)), reject_(std::move(reject)),
      accept_(std::move(accept)) {
    if (positions_ == 0 || offsets_.empty() || reject_.size() != positions_ * offsets_.size() ||
        accept_.size() != reject_.size()) {
        throw std::invalid_argument("KrausSet: inconsistent dimensions");
    }
    scale_ = 1.0 / std::sqrt(static_cast<double>(offsets_.size()));
}

std::span<const double> KrausSet::reject(std::size_t a) const {
    return std::span<const double>(reject_).subspan(a * positions_, positions_);
}

std::span<const double> KrausSet::accept(std::size_t a) const {
    return std::span<const double>(accept_).subspan(a * positions_, positions_);
}

std::size_t KrausSet::target_of(std::size_t x, std::size_t a) const {
    const auto n = static_cast<long long>(positions_);
    long long t = (static_cast<long long>(x) + offsets_.at(a)) % n;
    if (t < 0) {
        t += n;
    }
    return static_cast<std::size_t>(t);
}

double KrausSet::completeness_deviation() const {
    const double weight = scale_ * scale_;
    double worst = 0.0;
    for (std::size_t x = 0; x < positions_; ++x) {
        double sum = 0.0;
        for (std::size_t a = 0; a < actions(); ++a) {
            const double c = reject_[a * positions_ + x];
            const double s = accept_[a * positions_ + x];
            sum += weight * (c * c + s * s);
        }
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

std::vector<std::complex<double>> KrausSet::reject_operator(std::size_t a) const {
    std::vector<std::complex<double>> m(positions_ * positions_);
    const auto diag = reject(a);
    for (std::size_t x = 0; x < positions_; ++x) {
        m[x * positions_ + x] = scale_ * diag[x];
    }
    return m;
}

std::vector<std::complex<double>> KrausSet::accept_operator(std::size_t a) const {
    std::vector<std::complex<double>> m(positions_ * positions_);
    const auto diag = accept(a);
    for (std::size_t x = 0; x < positions_; ++x) {
        m[target_of(x, a) * positions_ + x] = scale_ * diag[x];
    }
    return m;
}

KrausSet build_kraus(const CircuitConfig &config, const ExpectedDistribution &pi) {
    config.validate();
    const std::size_t n = config.positions();
    if (pi.size() != n) {
        throw std::domain_error("build_kraus: distribution has " + std::to_string(pi.size()) +
                                " entries, register holds " + std::to_string(n));
    }
    const std::size_t actions = config.actions();
    const std::size_t intervals = config.intervals();

    std::vector<int> offsets(actions);
    for (std::size_t a = 0; a < actions; ++a) {
        offsets[a] = offset_of_action(a, config.n_a);
    }
    std::vector<double> reject(actions * n);
    std::vector<double> accept(actions * n);
    const auto nn = static_cast<long long>(n);
    for (std::size_t a = 0; a < actions; ++a) {
        for (std::size_t x = 0; x < n; ++x) {
            long long t = (static_cast<long long>(x) + offsets[a]) % nn;
            if (t < 0) {
                t += nn;
            }
            const double p = coin_prob(
                disc_index(acceptance_ratio(pi, x, static_cast<std::size_t>(t)), intervals),
                intervals);
            // sqrt rather than cos/sin(asin(.)) keeps the X-gate case exact.
            reject[a * n + x] = std::sqrt(1.0 - p);
            accept[a * n + x] = std::sqrt(p);
        }
    }
    return KrausSet(n, std::move(offsets), std::move(reject), std::move(accept));
}

DensityState::DensityState(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) {
        throw std::invalid_argument("DensityState: dimension must be positive");
    }
}

DensityState::DensityState(std::size_t n, std::vector<std::complex<double>> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n == 0 || entries_.size() != n * n) {
        throw std::invalid_argument("DensityState: expected " + std::to_string(n * n) +
                                    " entries");
    }
}

DensityState DensityState::uniform_superposition(std::size_t n) {
    DensityState rho(n);
    const double v = 1.0 / static_cast<double>(n);
    std::fill(rho.entries_.begin(), rho.entries_.end(), std::complex<double>(v, 0.0));
    return rho;
}

std::complex<double> DensityState::trace() const {
    std::complex<double> tr = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        tr += entries_[i * n_ + i];
    }
    return tr;
}

std::vector<double> DensityState::diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        d[i] = entries_[i * n_ + i].real();
    }
    return d;
}

DensityDiagnostics DensityState::diagnostics() const {
    DensityDiagnostics diag;
    diag.trace_deviation = std::abs(trace() - 1.0);
    diag.min_diagonal = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n_; ++r) {
        const auto &d = entries_[r * n_ + r];
        diag.min_diagonal = std::min(diag.min_diagonal, d.real());
        diag.max_diagonal_imag = std::max(diag.max_diagonal_imag, std::abs(d.imag()));
        for (std::size_t c = r + 1; c < n_; ++c) {
            const double dev = std::abs(entries_[r * n_ + c] - std::conj(entries_[c * n_ + r]));
            diag.hermiticity_deviation = std::max(diag.hermiticity_deviation, dev);
        }
    }
    return diag;
}

void DensityState::renormalize() {
    const std::complex<double> tr = trace();
    for (auto &e : entries_) {
        e /= tr;
    }
}

void channel_step(const DensityState &rho, const KrausSet &kraus, DensityState &out) {
    const std::size_t n = rho.size();
    if (kraus.positions() != n) {
        throw std::domain_error("channel_step: Kraus set acts on " +
                                std::to_string(kraus.positions()) + " states, state has " +
                                std::to_string(n));
    }
    if (out.size() != n) {
        out = DensityState(n);
    }
    const auto &k = kernels::active();
    const std::size_t actions = kraus.actions();
    const double weight = kraus.scale() * kraus.scale();
    const double *src = reinterpret_cast<const double *>(rho.entries().data());
    double *dst = reinterpret_cast<double *>(out.entries().data());
    const auto rows = static_cast<long long>(n);

    // Output row r receives, per action, the reject term from input row r and
    // the accept term from input row r - delta with columns shifted by delta.
#pragma omp parallel for schedule(static) if (n >= 64)
    for (long long rr = 0; rr < rows; ++rr) {
        const auto r = static_cast<std::size_t>(rr);
        double *out_row = dst + 2 * r * n;
        std::fill(out_row, out_row + 2 * n, 0.0);
        const double *stay_row = src + 2 * r * n;
        for (std::size_t a = 0; a < actions; ++a) {
            const std::size_t shift = kraus.target_of(0, a);
            const std::size_t from = (r + n - shift) % n;
            const double *move_row = src + 2 * from * n;
            const double *cos_a = kraus.reject(a).data();
            const double *sin_a = kraus.accept(a).data();
            const double alpha_stay = weight * cos_a[r];
            const double alpha_move = weight * sin_a[from];
            // Columns [shift, n) come from source columns [0, n - shift).
            k.dual_accumulate(out_row + 2 * shift, stay_row + 2 * shift, cos_a + shift,
                              alpha_stay, move_row, sin_a, alpha_move, n - shift);
            // Columns [0, shift) wrap around from source columns [n - shift, n).
            k.dual_accumulate(out_row, stay_row, cos_a, alpha_stay, move_row + 2 * (n - shift),
                              sin_a + (n - shift), alpha_move, shift);
        }
    }
}

DensityState channel_step(const DensityState &rho, const KrausSet &kraus) {
    DensityState out(rho.size());
    channel_step(rho, kraus, out);
    return out;
}

namespace {

void absorb(DensityDiagnostics &worst, const DensityDiagnostics &d) {
    worst.trace_deviation = std::max(worst.trace_deviation, d.trace_deviation);
    worst.hermiticity_deviation = std::max(worst.hermiticity_deviation, d.hermiticity_deviation);
    worst.min_diagonal = std::min(worst.min_diagonal, d.min_diagonal);
    worst.max_diagonal_imag = std::max(worst.max_diagonal_imag, d.max_diagonal_imag);
}

} // namespace

ConvergenceReport run_qmcmc(const CircuitConfig &config, const ExpectedDistribution &pi,
                            const RunOptions &options) {
    const KrausSet kraus = build_kraus(config, pi);
    const std::size_t n = config.positions();
    const bool adaptive = options.store_stride == 0;
    std::size_t stride = adaptive ? 1 : options.store_stride;

    ConvergenceReport report;
    report.config = config;
    report.expected.assign(pi.probs().begin(), pi.probs().end());
    report.kraus_completeness_deviation = kraus.completeness_deviation();
    report.kernel = std::string(kernels::name(kernels::active().isa));

    DensityState rho = DensityState::uniform_superposition(n);
    DensityState next(n);
    report.worst = rho.diagnostics();

    std::vector<double> previous = rho.diagonal();
    report.stored_iters.push_back(0);
    report.distributions.push_back(previous);
    report.tv_series.push_back(std::numeric_limits<double>::infinity());
    report.tv_to_expected_series.push_back(tv_distance(previous, report.expected));

    std::size_t t = 0;
    while (t < config.max_iters) {
        ++t;
        channel_step(rho, kraus, next);
        std::swap(rho, next);

        const double drift = std::abs(rho.trace() - 1.0);
        if (drift > 1e-9) {
            std::clog << "qmcmc: trace drift " << drift << " at iteration " << t
                      << ", renormalizing\n";
            rho.renormalize();
            ++report.renormalizations;
        }
        const DensityDiagnostics diag = rho.diagnostics();
        absorb(report.worst, diag);
        if (!diag.valid()) {
            throw std::logic_error(
                "run_qmcmc: density state invariant violated at iteration " + std::to_string(t) +
                " (trace dev " + std::to_string(diag.trace_deviation) + ", hermiticity dev " +
                std::to_string(diag.hermiticity_deviation) + ", min diag " +
                std::to_string(diag.min_diagonal) + ")");
        }

        std::vector<double> current = rho.diagonal();
        const double tv = tv_distance(current, previous);
        report.tv_series.push_back(tv);
        report.tv_to_expected_series.push_back(tv_distance(current, report.expected));
        const bool done = tv < config.epsilon || t == config.max_iters;
        if (t % stride == 0 || done) {
            report.stored_iters.push_back(t);
            report.distributions.push_back(current);
        }
        if (adaptive && report.stored_iters.size() >= kMaxStoredIters && !done) {
            stride *= 2;
            std::size_t kept = 0;
            for (std::size_t i = 0; i < report.stored_iters.size(); ++i) {
                if (report.stored_iters[i] % stride != 0) {
                    continue;
                }
                if (kept != i) {
                    report.stored_iters[kept] = report.stored_iters[i];
                    report.distributions[kept] = std::move(report.distributions[i]);
                }
                ++kept;
            }
            report.stored_iters.resize(kept);
            report.distributions.resize(kept);
        }
        previous = std::move(current);
        if (tv < config.epsilon) {
            report.converged_iter = t;
            break;
        }
    }
    report.iterations_run = t;
    report.final_distribution = previous;
    report.qubit_cost_at_convergence =
        qubit_cost(static_cast<std::uint64_t>(config.n_a), static_cast<std::uint64_t>(config.n_x),
                   static_cast<std::uint64_t>(config.n_acc),
                   report.converged_iter.value_or(report.iterations_run));
    return report;
}

ConvergenceReport run_qmcmc(const CircuitConfig &config, const TargetSpec &spec,
                            const RunOptions &options) {
    config.validate();
    if (spec.grid().qubits() != config.n_x) {
        throw std::domain_error("run_qmcmc: target grid has " +
                                std::to_string(spec.grid().qubits()) + " qubits, config n_x = " +
                                std::to_string(config.n_x));
    }
    return run_qmcmc(config, discretize_target(spec), options);
}

} // namespace qmcmc
