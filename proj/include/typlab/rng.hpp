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

#include <array>
#include <cstdint>
#include <utility>

namespace typlab {

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Largest sample index / block index accepted by `derive_stream_id`.
inline constexpr std::uint64_t kMaxSampleIndex = (std::uint64_t{1} << 44) - 1;
inline constexpr std::uint64_t kMaxBlockIndex = (std::uint64_t{1} << 20) - 1;

/// stream_id = mix64(sample_index << 20 | block_index). Injective over the
/// accepted ranges because mix64 is a bijection.
std::uint64_t derive_stream_id(std::uint64_t sample_index, std::uint64_t block_index);

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Counter-based random stream: key = master seed, counter words 2..3 =
/// stream id, counter words 0..1 = position within the stream (2^64 blocks of
/// 128 bits each).
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

    static RngStream for_block(std::uint64_t master_seed, std::uint64_t sample_index, std::uint64_t block_index) {
        return RngStream(master_seed, derive_stream_id(sample_index, block_index));
    }

    std::uint64_t master_seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_; }

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform() noexcept;
    /// Uniform integer in [0, n), n >= 1, unbiased (rejection).
    std::uint64_t next_below(std::uint64_t n) noexcept;

  private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t position_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    unsigned used_ = 4;
};

/// Two independent standard normal variates (Marsaglia polar method).
std::pair<double, double> gaussian_pair(RngStream &stream);

}  // namespace typlab
