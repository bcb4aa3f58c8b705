// Copyright 2026 The typlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "typlab/csv.hpp"
#include "typlab/linalg.hpp"
#include "typlab/reference.hpp"
#include "typlab/rng.hpp"
#include "typlab/sampling.hpp"

namespace typlab {

namespace {

std::string row_label(const SweepRow &r) {
    return "N=" + std::to_string(r.n) + " K=" + std::to_string(r.k) + " nB=" + std::to_string(r.n_b);
}

std::vector<std::size_t> range_step(std::size_t first, std::size_t last, std::size_t step) {
    std::vector<std::size_t> out;
    for (std::size_t n = first; n <= last; n += step) {
        out.push_back(n);
    }
    return out;
}

std::vector<std::size_t> doublings(std::size_t first, std::size_t last) {
    std::vector<std::size_t> out;
    for (std::size_t n = first; n <= last; n *= 2) {
        out.push_back(n);
    }
    return out;
}

HermitianMatrix random_hermitian(std::size_t dim, RngStream &rng) {
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = gaussian_pair(rng).first;
        for (std::size_t c = r + 1; c < dim; ++c) {
            auto [re, im] = gaussian_pair(rng);
            m(r, c) = Complex(re, im);
            m(c, r) = Complex(re, -im);
        }
    }
    return HermitianMatrix(std::move(m));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).max_abs(); }

}  // namespace

std::vector<ExperimentConfig> default_fixed_k_configs() {
    ExperimentConfig k1;
    k1.mode = Mode::FixedK;
    k1.k = 1;
    k1.n_values = range_step(2, 16, 2);
    ExperimentConfig k2 = k1;
    k2.k = 2;
    k2.n_values = range_step(2, 24, 2);
    return {k1, k2};
}

std::vector<ExperimentConfig> default_fixed_nb_configs() {
    ExperimentConfig nb1;
    nb1.mode = Mode::FixedNB;
    nb1.n_b = 1;
    nb1.n_values = doublings(8, 512);
    ExperimentConfig nb2 = nb1;
    nb2.n_b = 2;
    ExperimentConfig nb3 = nb1;
    nb3.n_b = 3;
    nb3.n_values = doublings(6, 384);
    return {nb1, nb2, nb3};
}

ExperimentConfig default_eigenvec_config() {
    ExperimentConfig c;
    c.mode = Mode::EigenvecBaseline;
    c.n_values = doublings(8, 512);
    return c;
}

ExperimentConfig default_typicality_config() {
    ExperimentConfig c;
    c.mode = Mode::TypicalityCheck;
    c.n_values = {10, 12};
    return c;
}

std::vector<CheckResult> sweep_checks(const ExperimentConfig &config, const SweepResult &result) {
    std::vector<CheckResult> checks;
    const bool haar = config.mode == Mode::FixedK || config.mode == Mode::FixedNB;
    std::size_t consistent = 0;
    for (const auto &r : result.rows) {
        const std::string label = row_label(r);
        if (haar) {
            checks.push_back(check_at_most("bound dominance " + label, r.var_a, r.density_bound, 3.0 * r.var_a_stderr,
                                           "var_a <= density_bound + 3 stderr"));
        }
        if (config.sigma.is_traceless()) {
            checks.push_back(check_within("mean consistency " + label, r.mean_a, 0.0, 4.0 * r.mean_a_stderr(),
                                          "|mean_a| <= 4 stderr(mean)"));
        }
        if (std::abs(r.var_a - r.exact_density_variance) <= 4.0 * r.var_a_stderr) {
            ++consistent;
        }
    }
    if (!result.rows.empty()) {
        const double rate = static_cast<double>(consistent) / static_cast<double>(result.rows.size());
        checks.push_back(check_at_least("oracle consistency rate (" + mode_name(config.mode) + ")", rate, 0.95,
                                        std::to_string(consistent) + "/" + std::to_string(result.rows.size()) +
                                            " rows within 4 stderr of exact"));
    }
    if (result.fit) {
        checks.push_back(
            check_within("log-log slope (" + mode_name(config.mode) + ")", result.fit->slope, -1.0, 0.1,
                         "r^2=" + format_real(result.fit->r_squared)));
    }
    return checks;
}

std::vector<CheckResult> bound_report_checks(const BoundReport &report, const LocalObservable &sigma) {
    std::vector<CheckResult> checks;
    const Partition &p = report.partition;
    const std::string label = p.to_string();
    if (sigma.is_traceless() && std::abs(sigma.op_norm() - 1.0) <= 1e-12) {
        checks.push_back(check_at_most("exact <= main bound " + label, report.exact_variance, report.main_bound));
    }
    if (p.local_dim() == 2 && std::abs(sigma.op_norm() - 1.0) <= 1e-12) {
        checks.push_back(check_within("main bound == qubit bound " + label, report.main_bound, report.qubit_bound,
                                      1e-12 * report.qubit_bound));
        const double n = static_cast<double>(p.n_sites());
        checks.push_back(check_within("density bound == qubit bound / N^2 " + label, report.density_bound,
                                      report.qubit_bound / (n * n), 1e-12 * report.density_bound));
    }
    if (p.n_blocks() == 1 && p.n_sites() <= 30) {
        // Whole system is one Haar block: Tr[Omega^2] = 1 / d^N and ||A_N|| = N ||sigma||.
        const double dim = std::pow(static_cast<double>(p.local_dim()), static_cast<double>(p.n_sites()));
        const double a_norm = static_cast<double>(p.n_sites()) * sigma.op_norm();
        checks.push_back(check_at_most("exact <= Reimann bound " + label, report.exact_variance,
                                       reimann_variance_bound(a_norm, 1.0 / dim)));
    }
    return checks;
}

std::vector<CheckResult> typicality_checks(const TypicalityReport &r) {
    const std::string label = "n=" + std::to_string(r.n_qubits) + " M=" + std::to_string(r.samples);
    return {
        check_at_most("typicality trace distance " + label, r.mean_trace_distance, r.bound, 0.0,
                      "mean (1/2)||rho - I/2||_1 vs (1/2)sqrt(d_S^2/d_R)"),
        check_at_most("typicality trace norm " + label, r.mean_trace_norm, 2.0 * r.bound, 0.0,
                      "mean ||rho - I/2||_1 vs sqrt(d_S^2/d_R)"),
        check_at_most("squared-distance bound " + label, r.mean_sq_trace_distance, r.squared_bound, 0.0,
                      "mean ((1/2)||rho - I/2||_1)^2 vs d^2/(4 d_B)"),
    };
}

BoundsVerification verify_bounds(const std::vector<ExperimentConfig> &configs) {
    BoundsVerification out;
    for (const auto &config : configs) {
        SweepResult result = run_sweep(config);
        auto sc = sweep_checks(config, result);
        out.checks.insert(out.checks.end(), sc.begin(), sc.end());
        if (config.mode == Mode::EigenvecBaseline) {
            continue;
        }
        for (const auto &row : result.rows) {
            Partition p(row.n, row.k, config.d);
            BoundReport br = make_bound_report(p, config.sigma);
            auto bc = bound_report_checks(br, config.sigma);
            out.checks.insert(out.checks.end(), bc.begin(), bc.end());
            out.reports.push_back(std::move(br));
        }
    }
    return out;
}

std::vector<CheckResult> exact_variance_oracle_checks(std::size_t max_n, std::uint64_t samples, std::uint64_t seed) {
    const std::vector<LocalObservable> sigmas = {
        LocalObservable::pauli_z(), LocalObservable::pauli_x(),
        LocalObservable(HermitianMatrix{{2.0, 0.0}, {0.0, 0.0}}, "diag(2,0)")};
    std::vector<CheckResult> checks;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (n % k != 0) {
                continue;
            }
            Partition p(n, k, 2);
            for (const auto &sigma : sigmas) {
                const double exact = exact_haar_ensemble_variance(p, sigma);
                const auto mc = reference::brute_force_haar_variance(p, sigma, samples, seed);
                checks.push_back(check_within("exact variance vs brute force " + p.to_string() + " " + sigma.name(),
                                              mc.variance, exact, 4.0 * mc.variance_stderr,
                                              "4 stderr, M=" + std::to_string(samples)));
            }
        }
    }
    return checks;
}

std::vector<CheckResult> selftest_checks(std::uint64_t mc_samples, std::uint64_t seed, unsigned workers) {
    std::vector<CheckResult> checks;
    RngStream rng(seed, 0xabcdefull);

    // Eigensolver: trace identities and reconstruction.
    {
        HermitianMatrix h = random_hermitian(8, rng);
        auto ev = hermitian_eigenvalues(h);
        double s1 = 0.0, s2 = 0.0;
        for (double x : ev) {
            s1 += x;
            s2 += x * x;
        }
        checks.push_back(check_within("eigenvalues reproduce Tr H (8x8)", s1, h.trace(), 1e-9));
        checks.push_back(check_within("eigenvalues reproduce Tr H^2 (8x8)", s2,
                                      reference::trace_of_square(h.matrix()), 1e-9));
        double worst = 0.0;
        for (std::size_t dim : {2u, 5u, 16u, 64u}) {
            HermitianMatrix m = random_hermitian(dim, rng);
            auto e = hermitian_eigen(m);
            ComplexMatrix lambda(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                lambda(i, i) = e.values[i];
            }
            worst = std::max(worst, max_abs_diff(m.matrix(), e.vectors * lambda * e.vectors.adjoint()));
        }
        checks.push_back(check_at_most("Jacobi reconstruction residual (D <= 64)", worst, 1e-10));
    }

    // Partial trace against the dense outer-product reference.
    {
        RngStream s = RngStream::for_block(seed, 1, 0);
        ComplexVector psi = haar_state(8, s);
        ComplexMatrix fast = partial_trace_single_site(psi, 2, 2).hermitian().matrix();
        ComplexMatrix slow = reference::outer_product_partial_trace(psi, 2, 2);
        checks.push_back(check_at_most("partial trace vs outer-product oracle", max_abs_diff(fast, slow), 1e-12));
    }

    // Trace norm against closed-form 2x2 eigenvalues.
    {
        RngStream s = RngStream::for_block(seed, 2, 0);
        DensityMatrix a = DensityMatrix::pure(haar_state(2, s));
        DensityMatrix b = partial_trace_single_site(haar_state(4, s), 0, 2);
        HermitianMatrix diff = a - b;
        auto ev = reference::eigenvalues_2x2(diff.matrix());
        checks.push_back(
            check_within("trace norm vs closed-form 2x2", trace_norm(diff), std::abs(ev[0]) + std::abs(ev[1]), 1e-12));
    }

    // Gaussian moments.
    {
        RngStream s(seed, 3);
        const std::uint64_t draws = 1000000;
        SampleStats g;
        for (std::uint64_t i = 0; i < draws / 2; ++i) {
            auto [x, y] = gaussian_pair(s);
            g.add(x);
            g.add(y);
        }
        checks.push_back(check_within("gaussian mean (1e6 draws)", g.mean(), 0.0, 4.0 / std::sqrt(double(draws))));
        checks.push_back(check_within("gaussian variance (1e6 draws)", g.variance(), 1.0, 0.01));
    }

    // Haar first and second moments of <Z> in dim 2.
    {
        Partition p(1, 1, 2);
        SampleStats z = run_ensemble(p, LocalObservable::pauli_z(), mc_samples, seed + 4, SamplerMode::Haar, workers);
        checks.push_back(check_within("Haar mean <Z> (dim 2)", z.mean(), 0.0, 4.0 * z.mean_stderr()));
        checks.push_back(check_within("Haar variance <Z> (dim 2)", z.variance(), 1.0 / 3.0, 0.03 / 3.0, "3%"));
    }

    // Contraction vs dense tensor product.
    {
        Partition p(4, 2, 2);
        const ComplexMatrix dense_z = reference::dense_extensive(LocalObservable::pauli_z().sigma().matrix(), 4);
        const ComplexMatrix dense_x = reference::dense_extensive(LocalObservable::pauli_x().sigma().matrix(), 4);
        const ExtensiveObservable az{LocalObservable::pauli_z(), 4};
        const ExtensiveObservable ax{LocalObservable::pauli_x(), 4};
        double worst = 0.0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            KSeparableState st = k_separable_state(p, i, seed + 5);
            ComplexVector full = reference::dense_product(st);
            worst = std::max(worst, std::abs(expectation_extensive(st, az) - reference::dense_expectation(full, dense_z)));
            worst = std::max(worst, std::abs(expectation_extensive(st, ax) - reference::dense_expectation(full, dense_x)));
        }
        checks.push_back(check_at_most("expectation vs dense tensor (N=4, K=2)", worst, 1e-9));
    }

    // Exact ensemble variance vs brute-force Monte Carlo.
    {
        auto oc = exact_variance_oracle_checks(6, mc_samples, seed + 6);
        checks.insert(checks.end(), oc.begin(), oc.end());
    }

    // Eigenbasis baseline exact value.
    checks.push_back(check_within("eigenbasis Var(a) N=4 pauli-z",
                                  exact_eigenbasis_density_variance(4, LocalObservable::pauli_z()), 0.25, 1e-15));

    // Tightness: oracle / bound = 2^nB / (2^nB + 1) >= 0.94 for nB >= 4.
    {
        double worst = 1.0;
        for (std::size_t nb = 4; nb <= 20; ++nb) {
            Partition p(nb, 1, 2);
            const double ratio = exact_haar_ensemble_variance(p, LocalObservable::pauli_z()) /
                                 qubit_variance_bound(nb, 1);
            const double expected = std::ldexp(1.0, int(nb)) / (std::ldexp(1.0, int(nb)) + 1.0);
            worst = std::min(worst, ratio);
            checks.push_back(check_within("tightness ratio formula nB=" + std::to_string(nb), ratio, expected, 1e-12));
        }
        checks.push_back(check_at_least("tightness ratio min over nB in [4, 20]", worst, 0.94));
    }
    return checks;
}

}  // namespace typlab
