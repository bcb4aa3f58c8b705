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

#include "typlab/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

template <class T>
T parse_field(std::string_view field, std::size_t line_no) {
    T v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ValidationError("CSV line " + std::to_string(line_no) + ": bad field '" + std::string(field) + "'");
    }
    return v;
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string sweep_csv_line(const SweepRow &r) {
    std::string line;
    line += std::to_string(r.n) + ",";
    line += std::to_string(r.k) + ",";
    line += std::to_string(r.n_b) + ",";
    line += std::to_string(r.m) + ",";
    line += format_real(r.mean_a) + ",";
    line += format_real(r.var_a) + ",";
    line += format_real(r.var_a_stderr) + ",";
    line += format_real(r.density_bound) + ",";
    line += format_real(r.exact_density_variance) + ",";
    line += std::to_string(r.seed);
    return line;
}

std::size_t emit_csv(std::span<const SweepRow> rows, std::ostream &out) {
    if (rows.empty()) {
        throw ValidationError("no rows to write");
    }
    std::string text(kSweepCsvHeader);
    text += "\n";
    for (const auto &r : rows) {
        text += sweep_csv_line(r);
        text += "\n";
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed to write CSV output");
    }
    return text.size();
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::ostringstream os;
    emit_csv(rows, os);
    return os.str();
}

std::size_t write_csv_file(std::span<const SweepRow> rows, const std::filesystem::path &path) {
    const std::string text = sweep_csv(rows);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path.string() + "'");
    }
    return text.size();
}

std::vector<SweepRow> read_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kSweepCsvHeader) {
                throw ValidationError("CSV header mismatch: '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != 10) {
            throw ValidationError("CSV line " + std::to_string(line_no) + ": expected 10 fields, got " +
                                  std::to_string(f.size()));
        }
        SweepRow r;
        r.n = parse_field<std::size_t>(f[0], line_no);
        r.k = parse_field<std::size_t>(f[1], line_no);
        r.n_b = parse_field<std::size_t>(f[2], line_no);
        r.m = parse_field<std::uint64_t>(f[3], line_no);
        r.mean_a = parse_field<double>(f[4], line_no);
        r.var_a = parse_field<double>(f[5], line_no);
        r.var_a_stderr = parse_field<double>(f[6], line_no);
        r.density_bound = parse_field<double>(f[7], line_no);
        r.exact_density_variance = parse_field<double>(f[8], line_no);
        r.seed = parse_field<std::uint64_t>(f[9], line_no);
        rows.push_back(r);
    }
    if (!header_seen) {
        throw ValidationError("empty CSV");
    }
    return rows;
}

std::string bound_csv(std::span<const BoundReport> reports) {
    std::string text(kBoundCsvHeader);
    text += "\n";
    for (const auto &b : reports) {
        const Partition &p = b.partition;
        text += std::to_string(p.n_sites()) + "," + std::to_string(p.n_blocks()) + "," +
                std::to_string(p.block_size()) + "," + std::to_string(p.local_dim()) + "," +
                format_real(b.sigma_norm) + "," + format_real(b.main_bound) + "," + format_real(b.qubit_bound) +
                "," + format_real(b.density_bound) + "," + format_real(b.exact_variance) + "," +
                format_real(b.exact_density_variance) + "\n";
    }
    return text;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace typlab
