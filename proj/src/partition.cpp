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

#include "typlab/partition.hpp"

#include <cmath>

#include "typlab/errors.hpp"

namespace typlab {

Partition::Partition(std::size_t n_sites, std::size_t n_blocks, std::size_t local_dim)
    : n_(n_sites), k_(n_blocks), n_b_(0), d_(local_dim), block_dim_(0) {
    if (n_ < 1) {
        throw ValidationError("partition needs N >= 1");
    }
    if (k_ < 1) {
        throw ValidationError("partition needs K >= 1");
    }
    if (d_ < 2) {
        throw ValidationError("partition needs d >= 2");
    }
    if (n_ % k_ != 0) {
        throw ValidationError("N=" + std::to_string(n_) + " is not divisible by K=" + std::to_string(k_));
    }
    n_b_ = n_ / k_;
    block_dim_ = ipow(d_, n_b_);
}

Partition Partition::with_block_size(std::size_t n_sites, std::size_t block_size, std::size_t local_dim) {
    if (block_size < 1) {
        throw ValidationError("block size must be >= 1");
    }
    if (n_sites % block_size != 0) {
        throw ValidationError("N=" + std::to_string(n_sites) + " is not divisible by n_B=" +
                              std::to_string(block_size));
    }
    return Partition(n_sites, n_sites / block_size, local_dim);
}

std::string Partition::to_string() const {
    return "Partition(N=" + std::to_string(n_) + ", K=" + std::to_string(k_) + ", n_B=" + std::to_string(n_b_) +
           ", d=" + std::to_string(d_) + ")";
}

KSeparableState::KSeparableState(Partition partition, std::vector<ComplexVector> blocks)
    : partition_(partition), blocks_(std::move(blocks)) {
    if (blocks_.size() != partition_.n_blocks()) {
        throw ValidationError("expected " + std::to_string(partition_.n_blocks()) + " blocks, got " +
                              std::to_string(blocks_.size()));
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (blocks_[j].dim() != partition_.block_dim()) {
            throw ValidationError("block " + std::to_string(j) + " has dimension " +
                                  std::to_string(blocks_[j].dim()) + ", expected " +
                                  std::to_string(partition_.block_dim()));
        }
        if (!(std::abs(blocks_[j].norm_squared() - 1.0) <= kNormTolerance)) {
            throw ValidationError("block " + std::to_string(j) + " is not normalized");
        }
    }
}

ComplexVector KSeparableState::dense() const {
    ComplexVector out{Complex(1.0)};
    for (const auto &b : blocks_) {
        out = kron(out, b);
    }
    return out;
}

}  // namespace typlab
