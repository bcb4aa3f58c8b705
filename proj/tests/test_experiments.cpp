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

#include <cmath>
#include <utility>

#include "doctest.h"
#include "test_util.hpp"
#include "typlab/bounds.hpp"
#include "typlab/errors.hpp"
#include "typlab/experiments.hpp"
#include "typlab/reference.hpp"

using namespace typlab;

namespace {

ExperimentConfig fixed_k(std::size_t k, std::vector<std::size_t> n, std::uint64_t samples = 1000) {
    ExperimentConfig c;
    c.mode = Mode::FixedK;
    c.k = k;
    c.n_values = std::move(n);
    c.samples = samples;
    return c;
}

ExperimentConfig fixed_nb(std::size_t n_b, std::vector<std::size_t> n, std::uint64_t samples = 1000) {
    ExperimentConfig c;
    c.mode = Mode::FixedNB;
    c.n_b = n_b;
    c.n_values = std::move(n);
    c.samples = samples;
    return c;
}

}  // namespace

TEST_CASE("SampleStats against the two-pass oracle") {
    RngStream rng(2, 3);
    std::vector<double> x;
    for (int i = 0; i < 5000; ++i) {
        const double g = gaussian_pair(rng).first;
        x.push_back(3.0 + g * g * g);
    }
    SampleStats one;
    for (double v : x) {
        one.add(v);
    }
    const auto ref = reference::two_pass_statistics(x);
    CHECK(one.mean() == doctest::Approx(ref.mean).epsilon(1e-12));
    CHECK(one.variance() == doctest::Approx(ref.variance).epsilon(1e-10));
    CHECK(one.mean_stderr() == doctest::Approx(ref.mean_stderr).epsilon(1e-10));
    CHECK(one.variance_stderr() == doctest::Approx(ref.variance_stderr).epsilon(1e-8));

    // Arbitrary chunkings, merged left to right and as a balanced tree.
    for (std::size_t chunk : {1u, 7u, 64u, 1000u, 4999u}) {
        std::vector<SampleStats> parts;
        for (std::size_t i = 0; i < x.size(); i += chunk) {
            SampleStats s;
            for (std::size_t j = i; j < std::min(x.size(), i + chunk); ++j) {
                s.add(x[j]);
            }
            parts.push_back(s);
        }
        SampleStats left;
        for (const auto &p : parts) {
            left.merge(p);
        }
        while (parts.size() > 1) {
            std::vector<SampleStats> next;
            for (std::size_t i = 0; i < parts.size(); i += 2) {
                SampleStats s = parts[i];
                if (i + 1 < parts.size()) {
                    s.merge(parts[i + 1]);
                }
                next.push_back(s);
            }
            parts = std::move(next);
        }
        for (const auto *s : {&left, &parts[0]}) {
            CHECK(s->count() == x.size());
            CHECK(s->mean() == doctest::Approx(one.mean()).epsilon(1e-10));
            CHECK(s->variance() == doctest::Approx(one.variance()).epsilon(1e-10));
            CHECK(s->m3() == doctest::Approx(one.m3()).epsilon(1e-9));
            CHECK(s->m4() == doctest::Approx(one.m4()).epsilon(1e-9));
        }
    }
    SampleStats empty;
    SampleStats copy = one;
    copy.merge(empty);
    CHECK(copy.variance() == one.variance());
    empty.merge(one);
    CHECK(empty.mean() == one.mean());
}

TEST_CASE("run_ensemble examples") {
    const auto id = run_ensemble(Partition(4, 2), LocalObservable::identity(), 200, 1, SamplerMode::Haar);
    CHECK(id.mean() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.variance() < 1e-28);

    const auto q = run_ensemble(Partition(1, 1), LocalObservable::pauli_z(), 100000, 42, SamplerMode::Haar);
    CHECK(std::abs(q.variance() - 1.0 / 3) < 0.03 / 3);

    const auto e = run_ensemble(Partition(8, 8), LocalObservable::pauli_z(), 10000, 42, SamplerMode::Eigenbasis);
    CHECK(std::abs(e.variance() - 0.125) < 0.1 * 0.125);

    CHECK_THROWS_AS(run_ensemble(Partition(2, 2), LocalObservable::pauli_z(), 1, 1, SamplerMode::Haar),
                    ValidationError);
    CHECK_THROWS_AS(run_ensemble(Partition(4, 2), LocalObservable::pauli_z(), 100, 1, SamplerMode::Eigenbasis),
                    ValidationError);
}

TEST_CASE("run_ensemble is independent of worker count") {
    const Partition p(6, 2);
    const auto x = LocalObservable::pauli_x();
    const auto a = run_ensemble(p, x, 1000, 9, SamplerMode::Haar, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto b = run_ensemble(p, x, 1000, 9, SamplerMode::Haar, w);
        CHECK(a.mean() == b.mean());
        CHECK(a.m2() == b.m2());
        CHECK(a.m4() == b.m4());
    }
}

TEST_CASE("fixed-K sweep in the exponential regime") {
    const auto res = sweep_fixed_k(fixed_k(1, {4, 6, 8, 10, 12, 14}));
    REQUIRE(res.rows.size() == 6);
    for (const auto &r : res.rows) {
        const double oracle = 1.0 / (double(r.n) * (std::ldexp(1.0, int(r.n)) + 1.0));
        INFO("N=", r.n);
        CHECK(r.exact_density_variance == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(std::abs(r.var_a - oracle) < 0.2 * oracle);
        CHECK(r.var_a <= r.density_bound + 3 * r.var_a_stderr);
        CHECK(r.k == 1);
        CHECK(r.n_b == r.n);
        CHECK(r.m == 1000);
        CHECK(r.seed == ExperimentConfig::kDefaultSeed);
    }
    CHECK(res.rows.back().density_bound == doctest::Approx(4.36e-6).epsilon(0.001));
    // The oracle sits at 2^14/(2^14+1) of the bound, so dominance carries the stderr allowance.
    CHECK(res.rows.back().var_a <= res.rows.back().density_bound + 3 * res.rows.back().var_a_stderr);
}

TEST_CASE("fixed-K sweep with two blocks decays faster than 1/N^2") {
    const auto res = sweep_fixed_k(fixed_k(2, {4, 8, 12}));
    for (std::size_t i = 0; i + 1 < res.rows.size(); ++i) {
        const auto &a = res.rows[i];
        const auto &b = res.rows[i + 1];
        CHECK(b.var_a * double(b.n * b.n) < a.var_a * double(a.n * a.n));
        const double oracle_a = double(a.n) / (std::ldexp(1.0, int(a.n / 2)) + 1.0) / double(a.n * a.n);
        CHECK(a.exact_density_variance == doctest::Approx(oracle_a).epsilon(1e-12));
    }
}

TEST_CASE("fixed-nB oracle values") {
    std::vector<std::size_t> ns{8, 16, 32, 64, 128, 256, 512};
    const auto res = sweep_fixed_nb(fixed_nb(1, ns, 50));
    std::vector<std::pair<double, double>> pts;
    for (const auto &r : res.rows) {
        CHECK(r.exact_density_variance == doctest::Approx(1.0 / (3.0 * double(r.n))).epsilon(1e-12));
        CHECK(r.k == r.n);
        pts.emplace_back(double(r.n), r.exact_density_variance);
    }
    const auto fit = fit_loglog_slope(pts);
    CHECK(std::abs(fit.slope + 1.0) < 1e-12);
    CHECK(std::abs(fit.r_squared - 1.0) < 1e-12);
    CHECK(res.rows[0].exact_density_variance / res.rows[1].exact_density_variance == doctest::Approx(2.0));
    REQUIRE(res.fit.has_value());

    const auto two = sweep_fixed_nb(fixed_nb(2, {256}, 50));
    CHECK(two.rows[0].exact_density_variance == doctest::Approx(7.8125e-4).epsilon(1e-12));
}

TEST_CASE("fixed-nB empirical slope") {
    const auto res = sweep_fixed_nb(fixed_nb(2, {8, 16, 32, 64, 128, 256, 512}));
    REQUIRE(res.fit.has_value());
    CHECK(res.fit->slope >= -1.1);
    CHECK(res.fit->slope <= -0.9);
    CHECK(res.fit->r_squared >= 0.99);
}

TEST_CASE("eigenvector baseline") {
    ExperimentConfig c;
    c.mode = Mode::EigenvecBaseline;
    c.n_values = {8, 16, 32, 64};
    const auto res = eigenvec_baseline(c);
    for (const auto &r : res.rows) {
        CHECK(std::abs(r.var_a - 1.0 / double(r.n)) < 0.15 / double(r.n));
        CHECK(r.exact_density_variance == doctest::Approx(1.0 / double(r.n)));
        CHECK(r.n_b == 1);
    }
    REQUIRE(res.fit.has_value());
    CHECK(std::abs(res.fit->slope + 1.0) < 0.1);
}

TEST_CASE("sweep validation") {
    try {
        sweep_fixed_k(fixed_k(3, {6, 7, 9, 10}));
        FAIL("expected a validation error");
    } catch (const ValidationError &e) {
        const std::string msg = e.what();
        CHECK(msg.find('7') != std::string::npos);
        CHECK(msg.find("10") != std::string::npos);
    }
    CHECK_THROWS_AS(sweep_fixed_nb(fixed_nb(3, {8})), ValidationError);
    CHECK_THROWS_AS(sweep_fixed_k(fixed_k(1, {4}, 1)), ValidationError);
    CHECK_THROWS_AS(sweep_fixed_k(fixed_k(1, {})), ValidationError);
    auto wrong = fixed_k(1, {4});
    wrong.mode = Mode::FixedNB;
    CHECK_THROWS_AS(sweep_fixed_k(wrong), ValidationError);
    CHECK(run_sweep(fixed_k(1, {2, 4}, 10)).rows.size() == 2);
}

TEST_CASE("sweeps are deterministic across worker counts") {
    auto c = fixed_k(2, {4, 8, 12}, 300);
    const auto a = sweep_fixed_k(c);
    c.workers = 5;
    const auto b = sweep_fixed_k(c);
    CHECK(a.rows == b.rows);
    c.seed = 43;
    CHECK(sweep_fixed_k(c).rows != a.rows);
}

TEST_CASE("mean consistency in sweep rows") {
    const auto res = sweep_fixed_nb(fixed_nb(3, {6, 12, 24}));
    for (const auto &r : res.rows) {
        CHECK(std::abs(r.mean_a) <= 4.0 * r.mean_a_stderr());
    }
}

TEST_CASE("log-log fit") {
    std::vector<std::pair<double, double>> inv, inv2;
    for (double n : {2.0, 4.0, 8.0, 16.0, 100.0}) {
        inv.emplace_back(n, 0.7 / n);
        inv2.emplace_back(n, 3.0 / (n * n));
    }
    const auto f1 = fit_loglog_slope(inv);
    CHECK(std::abs(f1.slope + 1.0) < 1e-12);
    CHECK(std::abs(f1.r_squared - 1.0) < 1e-12);
    CHECK(f1.intercept == doctest::Approx(std::log(0.7)));
    CHECK(fit_loglog_slope(inv2).slope == doctest::Approx(-2.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> two{{1.0, 1.0}, {2.0, 0.5}};
    CHECK_THROWS_AS(fit_loglog_slope(two), ValidationError);
    inv[2].second = 0.0;
    CHECK_THROWS_AS(fit_loglog_slope(inv), ValidationError);
    inv[2].second = -1.0;
    CHECK_THROWS_AS(fit_loglog_slope(inv), ValidationError);
}

TEST_CASE("canonical typicality") {
    const auto r2 = verify_canonical_typicality(2, 10000, 42);
    CHECK(r2.bound == doctest::Approx(0.5));
    CHECK(r2.mean_trace_distance <= 0.5);
    CHECK(r2.mean_trace_norm == doctest::Approx(2.0 * r2.mean_trace_distance));

    const auto r10 = verify_canonical_typicality(10, 1000, 42);
    const auto r12 = verify_canonical_typicality(12, 1000, 42);
    CHECK(r10.bound == doctest::Approx(0.03125));
    CHECK(r12.bound == doctest::Approx(0.015625));
    CHECK(r10.mean_trace_distance <= r10.bound);
    CHECK(r12.mean_trace_distance <= r12.bound);
    CHECK(r12.mean_trace_norm / r10.mean_trace_norm == doctest::Approx(0.5).epsilon(0.05));
    CHECK(r10.mean_sq_trace_distance <= r10.squared_bound);
    CHECK(r10.squared_bound == doctest::Approx(4.0 / (4.0 * 1024)));

    CHECK_THROWS_AS(verify_canonical_typicality(1, 100, 1), ValidationError);
    CHECK_THROWS_AS(verify_canonical_typicality(17, 100, 1), ValidationError);
    CHECK_THROWS_AS(verify_canonical_typicality(4, 1, 1), ValidationError);
}

TEST_CASE("mode names") {
    for (Mode m : {Mode::FixedK, Mode::FixedNB, Mode::EigenvecBaseline, Mode::TypicalityCheck}) {
        CHECK(parse_mode(mode_name(m)) == m);
    }
    CHECK_THROWS_AS(parse_mode("fixed-q"), ValidationError);
}
