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

// typlab: K-separable typicality experiments from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 config/validation error,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "typlab/config.hpp"
#include "typlab/csv.hpp"
#include "typlab/errors.hpp"
#include "typlab/experiments.hpp"
#include "typlab/report.hpp"
#include "typlab/verify.hpp"

namespace {

using namespace typlab;

constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<std::string> out;
    std::optional<unsigned> workers;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("config", opts.config_path, "Configuration file (key=value lines)");
    cmd->add_option("--seed", opts.seed, "Master seed")->envname("TYPLAB_SEED");
    cmd->add_option("--samples", opts.samples, "Samples per configuration (M)")->envname("TYPLAB_SAMPLES");
    cmd->add_option("--out", opts.out, "Output CSV path (stdout when omitted)")->envname("TYPLAB_OUT");
    cmd->add_option("--workers", opts.workers, "Worker threads")->envname("TYPLAB_WORKERS");
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path + "'");
    }
}

ExperimentConfig apply_overrides(ExperimentConfig cfg, const CommonOptions &opts) {
    if (opts.seed) {
        cfg.seed = *opts.seed;
    }
    if (opts.samples) {
        cfg.samples = *opts.samples;
    }
    if (opts.workers) {
        cfg.workers = *opts.workers;
    }
    return cfg;
}

/// Defaults for the subcommand, overlaid with the config file (whose mode,
/// when present, must agree) and the flag overrides.
ExperimentConfig resolve_config(const ExperimentConfig &defaults, const CommonOptions &opts) {
    ExperimentConfig cfg = defaults;
    if (!opts.config_path.empty()) {
        cfg = parse_config(read_file(opts.config_path), defaults);
        if (cfg.mode != defaults.mode) {
            throw ConfigError(0, "config mode '" + mode_name(cfg.mode) + "' does not match subcommand (expects '" +
                                     mode_name(defaults.mode) + "')");
        }
    }
    cfg = apply_overrides(cfg, opts);
    validate(cfg);
    return cfg;
}

std::string fit_json(const LogLogFit &fit) {
    return "{\"slope\": " + format_real(fit.slope) + ", \"intercept\": " + format_real(fit.intercept) +
           ", \"r_squared\": " + format_real(fit.r_squared) + "}";
}

int run_sweep_command(const std::string &name, const ExperimentConfig &defaults, const CommonOptions &opts) {
    const std::string started = utc_timestamp();
    const ExperimentConfig cfg = resolve_config(defaults, opts);
    const SweepResult result = run_sweep(cfg);
    const std::string csv = sweep_csv(result.rows);

    if (opts.out) {
        write_file(*opts.out, csv);
        RunManifest manifest;
        manifest.subcommand = name;
        manifest.config_text = config_to_text(cfg);
        manifest.master_seed = cfg.seed;
        manifest.start_timestamp = started;
        manifest.row_checksums = csv_row_checksums(csv);
        if (result.fit) {
            manifest.fit_json = fit_json(*result.fit);
        }
        write_file(*opts.out + ".manifest.json", manifest.to_json());
        std::cout << "wrote " << result.rows.size() << " rows to " << *opts.out << "\n";
    } else {
        std::cout << csv;
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing to stdout");
        }
    }
    if (result.fit) {
        std::cerr << "loglog fit: slope=" << format_real(result.fit->slope)
                  << " intercept=" << format_real(result.fit->intercept)
                  << " r2=" << format_real(result.fit->r_squared) << "\n";
    }
    return 0;
}

int finish_report(const std::vector<CheckResult> &checks) {
    const VerificationReport report = report_verification(checks);
    std::cout << report.text;
    return report.exit_code == 0 ? 0 : kExitVerification;
}

int run_verify_bounds(const CommonOptions &opts) {
    std::vector<ExperimentConfig> configs;
    if (!opts.config_path.empty()) {
        ExperimentConfig cfg = parse_config(read_file(opts.config_path));
        if (cfg.mode == Mode::TypicalityCheck) {
            throw ConfigError(0, "verify-bounds needs a sweep mode (fixed-k, fixed-nb or eigenvec)");
        }
        configs.push_back(cfg);
    } else {
        configs = default_fixed_k_configs();
        for (auto &c : default_fixed_nb_configs()) {
            configs.push_back(c);
        }
    }
    for (auto &c : configs) {
        c = apply_overrides(c, opts);
        validate(c);
    }
    const BoundsVerification v = verify_bounds(configs);
    if (opts.out) {
        write_file(*opts.out, bound_csv(v.reports));
    }
    return finish_report(v.checks);
}

int run_verify_typicality(const CommonOptions &opts) {
    const ExperimentConfig cfg = resolve_config(default_typicality_config(), opts);
    std::vector<CheckResult> checks;
    for (std::size_t n : cfg.n_values) {
        const TypicalityReport r = verify_canonical_typicality(n, cfg.samples, cfg.seed, cfg.workers);
        std::cout << "n=" << n << " M=" << r.samples << " mean trace distance=" << format_real(r.mean_trace_distance)
                  << " vs bound " << format_real(r.bound) << " (mean ||rho-I/2||_1=" << format_real(r.mean_trace_norm)
                  << " +/- " << format_real(r.mean_trace_norm_stderr) << ")\n";
        for (auto &c : typicality_checks(r)) {
            checks.push_back(std::move(c));
        }
    }
    return finish_report(checks);
}

int run_selftest(const CommonOptions &opts) {
    const std::uint64_t samples = opts.samples.value_or(100000);
    const std::uint64_t seed = opts.seed.value_or(20260101);
    return finish_report(selftest_checks(samples, seed, opts.workers.value_or(1)));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Monte Carlo typicality experiments on K-separable random pure states"};
    app.set_version_flag("--version", std::string(typlab::kToolVersion));
    app.require_subcommand(1);

    CommonOptions opts;
    struct Sub {
        const char *name;
        const char *help;
    };
    const Sub subs[] = {
        {"sweep-fixed-k", "Variance of a = A_N/N vs N at fixed block count K"},
        {"sweep-fixed-nb", "Variance of a vs N at fixed block size n_B, with log-log slope"},
        {"eigenvec-baseline", "Variance of a over random eigenvectors of the observable"},
        {"verify-bounds", "Check sweeps against the analytic bounds and the exact oracle"},
        {"verify-typicality", "Check single-site reduced states against the typicality bound"},
        {"selftest", "Run the oracle validation suite"},
    };
    std::vector<CLI::App *> cmds;
    for (const auto &s : subs) {
        CLI::App *cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, opts);
        cmds.push_back(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (cmds[0]->parsed()) {
            return run_sweep_command("sweep-fixed-k", default_fixed_k_configs().front(), opts);
        }
        if (cmds[1]->parsed()) {
            return run_sweep_command("sweep-fixed-nb", default_fixed_nb_configs().front(), opts);
        }
        if (cmds[2]->parsed()) {
            return run_sweep_command("eigenvec-baseline", default_eigenvec_config(), opts);
        }
        if (cmds[3]->parsed()) {
            return run_verify_bounds(opts);
        }
        if (cmds[4]->parsed()) {
            return run_verify_typicality(opts);
        }
        if (cmds[5]->parsed()) {
            return run_selftest(opts);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
