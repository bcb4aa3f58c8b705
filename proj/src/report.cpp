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

#include "typlab/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <string_view>

#include "json.hpp"
#include "typlab/csv.hpp"
#include "typlab/errors.hpp"

namespace typlab {

CheckResult check_within(std::string name, double measured, double reference, double tolerance, std::string detail) {
    CheckResult c{std::move(name), false, measured, reference, "within", tolerance, std::move(detail)};
    c.passed = std::abs(measured - reference) <= tolerance;
    return c;
}

CheckResult check_at_most(std::string name, double measured, double reference, double slack, std::string detail) {
    CheckResult c{std::move(name), false, measured, reference, "<=", slack, std::move(detail)};
    c.passed = measured <= reference + slack;
    return c;
}

CheckResult check_at_least(std::string name, double measured, double reference, std::string detail) {
    CheckResult c{std::move(name), false, measured, reference, ">=", 0.0, std::move(detail)};
    c.passed = measured >= reference;
    return c;
}

std::string format_check(const CheckResult &c) {
    std::string line = c.passed ? "PASS " : "FAIL ";
    line += c.name + ": measured=" + format_real(c.measured) + " " + c.relation + " " + format_real(c.reference);
    if (c.tolerance != 0.0) {
        line += " (tol " + format_real(c.tolerance) + ")";
    }
    if (!c.detail.empty()) {
        line += " [" + c.detail + "]";
    }
    return line;
}

VerificationReport report_verification(std::span<const CheckResult> checks) {
    VerificationReport r{{}, 0};
    std::size_t failed = 0;
    for (const auto &c : checks) {
        r.text += format_check(c) + "\n";
        if (!c.passed) {
            ++failed;
        }
    }
    r.text += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    r.exit_code = failed == 0 ? 0 : 1;
    return r;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["config"] = config_text;
    j["master_seed"] = master_seed;
    j["tool_version"] = tool_version;
    j["start_timestamp"] = start_timestamp;
    j["row_checksums"] = row_checksums;
    if (!fit_json.empty()) {
        j["fit"] = nlohmann::json::parse(fit_json);
    }
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string &text) {
    try {
        auto j = nlohmann::json::parse(text);
        RunManifest m;
        m.subcommand = j.at("subcommand").get<std::string>();
        m.config_text = j.at("config").get<std::string>();
        m.master_seed = j.at("master_seed").get<std::uint64_t>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.start_timestamp = j.at("start_timestamp").get<std::string>();
        m.row_checksums = j.at("row_checksums").get<std::vector<std::string>>();
        if (j.contains("fit")) {
            m.fit_json = j["fit"].dump();
        }
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed manifest: ") + e.what());
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::string> csv_row_checksums(const std::string &csv_text) {
    std::vector<std::string> out;
    std::string_view text(csv_text);
    std::size_t pos = text.find('\n');
    if (pos == std::string_view::npos) {
        return out;
    }
    ++pos;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(line)));
        out.emplace_back(buf);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
    }
    return out;
}

}  // namespace typlab
