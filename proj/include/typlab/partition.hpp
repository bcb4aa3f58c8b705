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
#include <string>
#include <vector>

#include "typlab/linalg.hpp"

namespace typlab {

/// N sites of local dimension d split into K contiguous blocks of n_B = N / K
/// sites. Block j owns sites [j * n_B, (j + 1) * n_B).
class Partition {
  public:
    Partition(std::size_t n_sites, std::size_t n_blocks, std::size_t local_dim = 2);

    static Partition with_block_size(std::size_t n_sites, std::size_t block_size, std::size_t local_dim = 2);

    std::size_t n_sites() const noexcept { return n_; }
    std::size_t n_blocks() const noexcept { return k_; }
    std::size_t block_size() const noexcept { return n_b_; }
    std::size_t local_dim() const noexcept { return d_; }
    /// d^{n_B}
    std::size_t block_dim() const noexcept { return block_dim_; }

    std::string to_string() const;
    bool operator==(const Partition &) const = default;

  private:
    std::size_t n_;
    std::size_t k_;
    std::size_t n_b_;
    std::size_t d_;
    std::size_t block_dim_;
};

/// Product of K normalized block vectors, each of dimension d^{n_B}.
class KSeparableState {
  public:
    static constexpr double kNormTolerance = 1e-12;

    KSeparableState(Partition partition, std::vector<ComplexVector> blocks);

    const Partition &partition() const noexcept { return partition_; }
    const std::vector<ComplexVector> &blocks() const noexcept { return blocks_; }
    const ComplexVector &block(std::size_t j) const { return blocks_.at(j); }

    /// Full d^N amplitude vector. Only sensible for small N.
    ComplexVector dense() const;

  private:
    Partition partition_;
    std::vector<ComplexVector> blocks_;
};

}  // namespace typlab
