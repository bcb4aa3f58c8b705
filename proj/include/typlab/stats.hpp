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

#include <cstdint>

namespace typlab {

/// Streaming count, mean and central-moment sums (M2, M3, M4). Chunks merge
/// with the pairwise update of Chan et al. / Pebay.
class SampleStats {
  public:
    void add(double x) noexcept;
    void merge(const SampleStats &other) noexcept;

    std::uint64_t count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    double m2() const noexcept { return m2_; }
    double m3() const noexcept { return m3_; }
    double m4() const noexcept { return m4_; }

    /// Unbiased variance M2 / (n - 1); 0 for n < 2.
    double variance() const noexcept;
    /// sqrt(variance / n)
    double mean_stderr() const noexcept;
    /// Standard error of `variance()`: sqrt((m4 - s^4 (n - 3) / (n - 1)) / n)
    /// with m4 = M4 / n the fourth central moment.
    double variance_stderr() const noexcept;

  private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

}  // namespace typlab
