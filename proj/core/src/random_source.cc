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

#include "cliffc/random_source.h"

namespace cliffc {

namespace {

std::mt19937_64 seeded_engine(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)stream, (uint32_t)(stream >> 32)};
    return std::mt19937_64(seq);
}

std::mt19937_64 seeded_engine(uint64_t seed, uint64_t stream, uint64_t index) {
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)stream,
                      (uint32_t)(stream >> 32), (uint32_t)index, (uint32_t)(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(uint64_t seed, uint64_t stream) : engine_(seeded_engine(seed, stream)) {
}

RandomSource::RandomSource(uint64_t seed, uint64_t stream, uint64_t index)
    : engine_(seeded_engine(seed, stream, index)) {
}

bool RandomSource::bit() {
    if (buffered_ == 0) {
        buffer_ = engine_();
        buffered_ = 64;
    }
    bool b = buffer_ & 1;
    buffer_ >>= 1;
    buffered_--;
    bits_consumed_++;
    return b;
}

uint64_t RandomSource::truncated_geometric(uint64_t cap) {
    if (cap <= 1) {
        return 1;
    }
    while (true) {
        for (uint64_t a = 1; a <= cap; a++) {
            if (bit()) {
                return a;
            }
        }
        rejected_bits_ += cap;
    }
}

}  // namespace cliffc
