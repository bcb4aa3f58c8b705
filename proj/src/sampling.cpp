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

#include "typlab/sampling.hpp"

#include <cmath>
#include <vector>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

std::vector<Complex> gaussian_amplitudes(std::size_t dim, RngStream &stream) {
    std::vector<Complex> amps(dim);
    for (auto &a : amps) {
        auto [re, im] = gaussian_pair(stream);
        a = Complex(re, im);
    }
    return amps;
}

bool all_zero(const std::vector<Complex> &v) {
    for (const auto &a : v) {
        if (a != 0.0) {
            return false;
        }
    }
    return true;
}

}  // namespace

ComplexVector haar_state(std::size_t dim, RngStream &stream) {
    if (dim < 1) {
        throw ValidationError("Haar state dimension must be >= 1");
    }
    auto amps = gaussian_amplitudes(dim, stream);
    if (all_zero(amps)) {
        amps = gaussian_amplitudes(dim, stream);
    }
    return normalize(ComplexVector(std::move(amps)));
}

KSeparableState k_separable_state(const Partition &partition, std::uint64_t sample_index, std::uint64_t master_seed) {
    std::vector<ComplexVector> blocks;
    blocks.reserve(partition.n_blocks());
    for (std::size_t j = 0; j < partition.n_blocks(); ++j) {
        RngStream stream = RngStream::for_block(master_seed, sample_index, j);
        blocks.push_back(haar_state(partition.block_dim(), stream));
    }
    return KSeparableState(partition, std::move(blocks));
}

KSeparableState eigenbasis_product_state(const Partition &partition, const LocalObservable &sigma,
                                         RngStream &stream) {
    if (partition.n_blocks() != partition.n_sites()) {
        throw ValidationError("eigenbasis product states need a fully separable partition (K == N), got " +
                              partition.to_string());
    }
    const std::size_t d = sigma.dim();
    if (d != partition.local_dim()) {
        throw ValidationError("observable dimension does not match partition");
    }
    const ComplexMatrix &vecs = sigma.eigen().vectors;
    std::vector<ComplexVector> basis;
    basis.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Complex> col(d);
        for (std::size_t r = 0; r < d; ++r) {
            col[r] = vecs(r, k);
        }
        basis.push_back(normalize(ComplexVector(std::move(col))));
    }
    std::vector<ComplexVector> blocks;
    blocks.reserve(partition.n_sites());
    for (std::size_t l = 0; l < partition.n_sites(); ++l) {
        blocks.push_back(basis[stream.next_below(d)]);
    }
    return KSeparableState(partition, std::move(blocks));
}

}  // namespace typlab
