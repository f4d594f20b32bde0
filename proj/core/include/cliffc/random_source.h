// Copyright 2026 The cliffc Authors
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

#ifndef CLIFFC_RANDOM_SOURCE_H
#define CLIFFC_RANDOM_SOURCE_H

#include <cstdint>
#include <random>

namespace cliffc {

/// Seedable bit stream with consumption accounting.
///
/// The engine is std::mt19937_64 seeded through std::seed_seq with the four 32-bit
/// halves of (seed, stream), so outputs are identical on every conforming platform.
/// Bits are handed out one at a time from 64-bit engine words, least significant first.
class RandomSource {
   public:
    explicit RandomSource(uint64_t seed, uint64_t stream = 0);
    /// Independent source for item `index` of a batch; seeds with all six 32-bit halves.
    RandomSource(uint64_t seed, uint64_t stream, uint64_t index);

    bool bit();
    /// Index a in [1, cap] with probability proportional to 2^-a. Draws fair coins until
    /// the first one and restarts when more than `cap` coins are needed; bits spent on
    /// abandoned attempts are also added to `rejected_bits`. cap == 1 consumes nothing.
    uint64_t truncated_geometric(uint64_t cap);

    uint64_t bits_consumed() const {
        return bits_consumed_;
    }
    uint64_t rejected_bits() const {
        return rejected_bits_;
    }
    void reset_counters() {
        bits_consumed_ = 0;
        rejected_bits_ = 0;
    }

   private:
    std::mt19937_64 engine_;
    uint64_t buffer_ = 0;
    unsigned buffered_ = 0;
    uint64_t bits_consumed_ = 0;
    uint64_t rejected_bits_ = 0;
};

}  // namespace cliffc

#endif
