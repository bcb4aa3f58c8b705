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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typlab/bounds.hpp"
#include "typlab/experiments.hpp"

namespace typlab {

inline constexpr std::string_view kSweepCsvHeader =
    "N,K,nB,M,mean_a,var_a,var_a_stderr,density_bound,exact_density_variance,seed";
inline constexpr std::string_view kBoundCsvHeader =
    "N,K,nB,d,sigma_norm,main_bound,qubit_bound,density_bound,exact_variance,exact_density_variance";

/// printf("%.12g")
std::string format_real(double x);

/// Writes header plus one LF-terminated line per row; returns bytes written.
/// Empty input is a ValidationError.
std::size_t emit_csv(std::span<const SweepRow> rows, std::ostream &out);
std::string sweep_csv(std::span<const SweepRow> rows);
/// Throws IoError when the file cannot be written.
std::size_t write_csv_file(std::span<const SweepRow> rows, const std::filesystem::path &path);
/// Parses text produced by emit_csv.
std::vector<SweepRow> read_csv(std::string_view text);

std::string sweep_csv_line(const SweepRow &row);
std::string bound_csv(std::span<const BoundReport> reports);

/// FNV-1a 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace typlab
