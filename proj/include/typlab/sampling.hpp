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

#include "typlab/linalg.hpp"
#include "typlab/observables.hpp"
#include "typlab/partition.hpp"
#include "typlab/rng.hpp"

namespace typlab {

/// Uniform (Haar) random unit vector in C^dim: i.i.d. complex Gaussian
/// amplitudes, then normalized. An all-zero draw is retried once.
ComplexVector haar_state(std::size_t dim, RngStream &stream);

/// Block j is drawn from `RngStream::for_block(master_seed, sample_index, j)`,
/// so the result depends only on (partition, sample_index, master_seed).
KSeparableState k_separable_state(const Partition &partition, std::uint64_t sample_index, std::uint64_t master_seed);

/// Fully separable state whose every site is an eigenvector of sigma chosen
/// uniformly from the eigensolver's orthonormal basis. Requires K == N.
KSeparableState eigenbasis_product_state(const Partition &partition, const LocalObservable &sigma,
                                         RngStream &stream);

}  // namespace typlab
