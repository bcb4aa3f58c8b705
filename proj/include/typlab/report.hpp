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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace typlab {

/// One verified claim: `measured` compared with `reference` under `relation`
/// ("<=", "within", ...) at `tolerance`.
struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double reference = 0.0;
    std::string relation;
    double tolerance = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string text;
    int exit_code;
};

/// `|measured - reference| <= tolerance`
CheckResult check_within(std::string name, double measured, double reference, double tolerance,
                         std::string detail = {});
/// `measured <= reference + slack`
CheckResult check_at_most(std::string name, double measured, double reference, double slack = 0.0,
                          std::string detail = {});
/// `measured >= reference`
CheckResult check_at_least(std::string name, double measured, double reference, std::string detail = {});

/// One "PASS|FAIL name: ..." line per check plus a summary line. Exit code 0
/// iff every check passed, else 1.
VerificationReport report_verification(std::span<const CheckResult> checks);
std::string format_check(const CheckResult &check);

inline constexpr const char *kToolVersion = "0.1.0";

/// Provenance for one CLI run, written next to the CSV.
struct RunManifest {
    std::string subcommand;
    std::string config_text;
    std::uint64_t master_seed = 0;
    std::string tool_version = kToolVersion;
    std::string start_timestamp;
    /// FNV-1a 64-bit of each CSV data line (without the LF), hex.
    std::vector<std::string> row_checksums;
    std::string fit_json;

    std::string to_json() const;
    static RunManifest from_json(const std::string &text);
};

std::string utc_timestamp();
std::vector<std::string> csv_row_checksums(const std::string &csv_text);

}  // namespace typlab
