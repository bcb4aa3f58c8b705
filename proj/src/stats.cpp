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

#include "typlab/stats.hpp"

#include <algorithm>
#include <cmath>

namespace typlab {

void SampleStats::add(double x) noexcept {
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean_ += delta_n;
    m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
    m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
    m2_ += term1;
}

void SampleStats::merge(const SampleStats &other) noexcept {
    if (other.n_ == 0) {
        return;
    }
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    const double delta2 = delta * delta;
    const double delta3 = delta2 * delta;
    const double delta4 = delta2 * delta2;

    const double m2 = m2_ + other.m2_ + delta2 * na * nb / n;
    const double m3 = m3_ + other.m3_ + delta3 * na * nb * (na - nb) / (n * n) +
                      3.0 * delta * (na * other.m2_ - nb * m2_) / n;
    const double m4 = m4_ + other.m4_ + delta4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6.0 * delta2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
                      4.0 * delta * (na * other.m3_ - nb * m3_) / n;

    mean_ = mean_ + delta * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += other.n_;
}

double SampleStats::variance() const noexcept {
    if (n_ < 2) {
        return 0.0;
    }
    return std::max(0.0, m2_ / static_cast<double>(n_ - 1));
}

double SampleStats::mean_stderr() const noexcept {
    if (n_ < 2) {
        return 0.0;
    }
    return std::sqrt(variance() / static_cast<double>(n_));
}

double SampleStats::variance_stderr() const noexcept {
    if (n_ < 2) {
        return 0.0;
    }
    const double n = static_cast<double>(n_);
    const double s2 = variance();
    const double central4 = m4_ / n;
    const double se2 = (central4 - s2 * s2 * (n - 3.0) / (n - 1.0)) / n;
    return se2 > 0.0 ? std::sqrt(se2) : 0.0;
}

}  // namespace typlab
