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

#include <string>
#include <string_view>

#include "typlab/experiments.hpp"
#include "typlab/linalg.hpp"

namespace typlab {

/// Parses flat `key=value` configuration text on top of `base`.
///
/// Grammar, one entry per line; blank lines and lines starting with '#' are
/// skipped:
///
///     mode    = fixed-k | fixed-nb | eigenvec | typicality
///     n       = 4,8,12          (comma-separated site counts)
///     k       = 2               (block count, fixed-k)
///     nb      = 2               (block size, fixed-nb)
///     d       = 2               (local dimension)
///     sigma   = pauli-z | pauli-x | pauli-y | identity | [[a,b],[c,d]]
///     samples = 1000            (alias: m)
///     seed    = 42
///     workers = 4
///
/// Matrix entries are real or complex literals such as `1`, `-0.5`, `i`,
/// `2-3i`, `1e-3+0.5i`. Errors are ConfigError with the offending line.
ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base = {});

/// Inverse of parse_config for everything that affects results (workers is
/// omitted).
std::string config_to_text(const ExperimentConfig &config);

Complex parse_complex(std::string_view text);
/// Parses `[[...],[...]]` into a square matrix; Hermiticity is not checked.
ComplexMatrix parse_matrix(std::string_view text);
/// Preset name or matrix literal; `d` sizes the identity preset.
LocalObservable parse_sigma(std::string_view text, std::size_t d);

}  // namespace typlab
