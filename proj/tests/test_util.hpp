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

#include <cmath>
#include <vector>

#include "typlab/linalg.hpp"
#include "typlab/rng.hpp"

namespace typlab::test {

inline HermitianMatrix random_hermitian(std::size_t dim, RngStream &rng) {
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = gaussian_pair(rng).first;
        for (std::size_t c = r + 1; c < dim; ++c) {
            auto [re, im] = gaussian_pair(rng);
            m(r, c) = Complex(re, im);
            m(c, r) = Complex(re, -im);
        }
    }
    return HermitianMatrix(std::move(m));
}

/// Standard error of the mean of x.
inline double sem(const std::vector<double> &x) {
    double m = 0.0;
    for (double v : x) {
        m += v;
    }
    m /= double(x.size());
    double s = 0.0;
    for (double v : x) {
        s += (v - m) * (v - m);
    }
    return std::sqrt(s / double(x.size() - 1) / double(x.size()));
}

inline double mean(const std::vector<double> &x) {
    double m = 0.0;
    for (double v : x) {
        m += v;
    }
    return m / double(x.size());
}

}  // namespace typlab::test
