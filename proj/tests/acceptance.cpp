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

// Acceptance suite. Prints one PASS/FAIL line per criterion, preceded by the
// individual checks that make it up. Exit status is 0 iff every selected
// criterion passes.
//
//   typlab_acceptance                 run all criteria (6 first)
//   typlab_acceptance --criterion 3   run one criterion

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "typlab/bounds.hpp"
#include "typlab/csv.hpp"
#include "typlab/experiments.hpp"
#include "typlab/report.hpp"
#include "typlab/sampling.hpp"
#include "typlab/verify.hpp"

using namespace typlab;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kSweepSamples = 1000;

ExperimentConfig fixed_k_config(std::size_t k, std::vector<std::size_t> n) {
    ExperimentConfig c;
    c.mode = Mode::FixedK;
    c.k = k;
    c.n_values = std::move(n);
    c.samples = kSweepSamples;
    c.seed = kSeed;
    return c;
}

ExperimentConfig fixed_nb_config(std::size_t n_b) {
    ExperimentConfig c;
    c.mode = Mode::FixedNB;
    c.n_b = n_b;
    c.n_values = {8, 16, 32, 64, 128, 256, 512};
    c.samples = kSweepSamples;
    c.seed = kSeed;
    return c;
}

ExperimentConfig eigenvec_config() {
    ExperimentConfig c = fixed_nb_config(1);
    c.mode = Mode::EigenvecBaseline;
    return c;
}

std::string n_label(const SweepRow &r) { return "N=" + std::to_string(r.n) + " K=" + std::to_string(r.k); }

std::vector<CheckResult> criterion_1() {
    std::vector<CheckResult> out;
    const auto res = sweep_fixed_k(fixed_k_config(1, {4, 6, 8, 10, 12, 14}));
    for (const auto &r : res.rows) {
        const double oracle = 1.0 / (double(r.n) * (std::ldexp(1.0, int(r.n)) + 1.0));
        out.push_back(check_within("var_a vs oracle " + n_label(r), r.var_a, oracle, 0.2 * oracle, "20%"));
        out.push_back(check_at_most("var_a vs density bound " + n_label(r), r.var_a, r.density_bound,
                                    3.0 * r.var_a_stderr, "3 stderr"));
    }
    return out;
}

std::vector<CheckResult> criterion_2() {
    std::vector<CheckResult> out;
    for (std::size_t n_b = 4; n_b <= 20; ++n_b) {
        const Partition p(n_b, 1);
        const double ratio =
            exact_haar_ensemble_variance(p, LocalObservable::pauli_z()) / qubit_variance_bound(n_b, 1);
        out.push_back(check_at_least("oracle/bound nB=" + std::to_string(n_b), ratio, 0.94));
    }
    // Empirical side: the criterion-1 rows with n_B >= 4 sit within 20% of the
    // oracle, so their ratio to the bound stays within 20% of the analytic ratio.
    const auto res = sweep_fixed_k(fixed_k_config(1, {4, 6, 8, 10, 12, 14}));
    for (const auto &r : res.rows) {
        const double analytic = r.exact_density_variance / r.density_bound;
        out.push_back(check_within("empirical var_a/bound " + n_label(r), r.var_a / r.density_bound, analytic,
                                   0.2 * analytic, "20%"));
    }
    return out;
}

std::vector<CheckResult> criterion_3() {
    std::vector<CheckResult> out;
    for (std::size_t n_b : {1u, 2u}) {
        const auto res = sweep_fixed_nb(fixed_nb_config(n_b));
        const std::string tag = "nB=" + std::to_string(n_b);
        out.push_back(check_within("slope " + tag, res.fit->slope, -1.0, 0.1));
        out.push_back(check_at_least("r^2 " + tag, res.fit->r_squared, 0.99));
    }
    return out;
}

std::vector<CheckResult> criterion_4() {
    std::vector<CheckResult> out;
    const auto res = eigenvec_baseline(eigenvec_config());
    for (const auto &r : res.rows) {
        const double want = 1.0 / double(r.n);
        out.push_back(check_within("var_a vs 1/N N=" + std::to_string(r.n), r.var_a, want, 0.15 * want, "15%"));
    }
    out.push_back(check_within("slope", res.fit->slope, -1.0, 0.1));
    return out;
}

std::vector<CheckResult> criterion_5() {
    std::vector<CheckResult> out;
    for (auto [n, bound] : {std::pair<std::size_t, double>{10, 0.03125}, {12, 0.015625}}) {
        const auto rep = verify_canonical_typicality(n, kSweepSamples, kSeed);
        out.push_back(check_at_most("mean ||rho - I/2||_1 n=" + std::to_string(n), rep.mean_trace_norm, bound, 0.0,
                                    "stderr " + format_real(rep.mean_trace_norm_stderr)));
    }
    return out;
}

// Same runs as criterion 5 with the trace distance (the halved norm).
std::vector<CheckResult> criterion_5b() {
    std::vector<CheckResult> out;
    for (std::size_t n : {10u, 12u}) {
        const auto rep = verify_canonical_typicality(n, kSweepSamples, kSeed);
        out.push_back(check_at_most("mean trace distance n=" + std::to_string(n), rep.mean_trace_distance,
                                    rep.bound));
    }
    return out;
}

std::vector<CheckResult> criterion_6() { return exact_variance_oracle_checks(6, 100000, kSeed); }

std::vector<CheckResult> criterion_7() {
    std::vector<CheckResult> out;
    auto add_rows = [&](const SweepResult &res, const std::string &tag) {
        for (const auto &r : res.rows) {
            out.push_back(check_at_most("|mean_a| " + tag + " " + n_label(r), std::abs(r.mean_a),
                                        4.0 * r.mean_a_stderr(), 0.0, "4 stderr"));
        }
    };
    add_rows(sweep_fixed_k(fixed_k_config(1, {4, 6, 8, 10, 12, 14})), "fixed-k");
    add_rows(sweep_fixed_nb(fixed_nb_config(1)), "fixed-nb");
    add_rows(sweep_fixed_nb(fixed_nb_config(2)), "fixed-nb");
    add_rows(eigenvec_baseline(eigenvec_config()), "eigenvec");
    return out;
}

std::vector<CheckResult> criterion_8() {
    std::vector<CheckResult> out;
    for (auto config : default_fixed_k_configs()) {
        config.workers = 1;
        const std::string one = sweep_csv(sweep_fixed_k(config).rows);
        config.workers = 4;
        const std::string four = sweep_csv(sweep_fixed_k(config).rows);
        CheckResult c = check_within("CSV bytes equal K=" + std::to_string(config.k) + " workers 1 vs 4",
                                     double(one == four), 1.0, 0.0, std::to_string(one.size()) + " bytes");
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> criterion_9() {
    constexpr std::uint64_t m = 100000;
    const LocalObservable z = LocalObservable::pauli_z();
    const ComplexMatrix had = (1.0 / std::sqrt(2.0)) * ComplexMatrix{{1.0, 1.0}, {1.0, -1.0}};
    const LocalObservable rotated(HermitianMatrix(had * z.sigma().matrix() * had), "HZH");
    std::array<SampleStats, 4> mz, mr;
    for (std::uint64_t i = 0; i < m; ++i) {
        RngStream sz = RngStream::for_block(kSeed, i, 0);
        RngStream sr = RngStream::for_block(kSeed + 1, i, 0);
        const double a = expectation_site(haar_state(2, sz), 0, z);
        const double b = expectation_site(haar_state(2, sr), 0, rotated);
        for (int k = 0; k < 4; ++k) {
            mz[k].add(std::pow(a, k + 1));
            mr[k].add(std::pow(b, k + 1));
        }
    }
    std::vector<CheckResult> out;
    for (int k = 0; k < 4; ++k) {
        const double se = std::hypot(mz[k].mean_stderr(), mr[k].mean_stderr());
        out.push_back(check_within("moment " + std::to_string(k + 1) + " <Z> vs <HZH>", mz[k].mean(), mr[k].mean(),
                                   4.0 * se, "4 combined stderr"));
    }
    return out;
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<std::vector<CheckResult>()> run;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all = {
        {"6", "oracle validation gate", criterion_6},
        {"1", "exponential regime at fixed K=1", criterion_1},
        {"2", "bound tightness", criterion_2},
        {"3", "classical regime slope at fixed nB", criterion_3},
        {"4", "eigenbasis baseline", criterion_4},
        {"5", "canonical typicality, trace norm", criterion_5},
        {"5b", "canonical typicality, trace distance", criterion_5b},
        {"7", "mean check", criterion_7},
        {"8", "determinism across worker counts", criterion_8},
        {"9", "Haar invariance", criterion_9},
    };
    return all;
}

bool run_criterion(const Criterion &c) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string error;
    try {
        checks = c.run();
    } catch (const std::exception &e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t passed = 0;
    for (const auto &chk : checks) {
        // Sub-check lines are indented and tagged ok/miss so only summary lines start with PASS/FAIL.
        std::cout << "    " << (chk.passed ? "ok   " : "miss ") << format_check(chk).substr(5) << "\n";
        passed += chk.passed;
    }
    const bool ok = error.empty() && !checks.empty() && passed == checks.size();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << passed << "/"
              << checks.size() << " checks, " << timing;
    if (!error.empty()) {
        std::cout << ", error: " << error;
    }
    std::cout << std::endl;
    return ok;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"typlab acceptance suite"};
    std::string only;
    app.add_option("--criterion", only, "run a single criterion (1-9, 5b)");
    CLI11_PARSE(app, argc, argv);

    bool all_ok = true;
    bool matched = false;
    for (const auto &c : criteria()) {
        if (!only.empty() && c.id != only) {
            continue;
        }
        matched = true;
        all_ok = run_criterion(c) && all_ok;
        if (only.empty() && c.id == "6" && !all_ok) {
            std::cout << "oracle gate failed; remaining criteria not run" << std::endl;
            return 1;
        }
    }
    if (!matched) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}
