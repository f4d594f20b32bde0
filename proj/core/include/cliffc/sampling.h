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

#ifndef CLIFFC_SAMPLING_H
#define CLIFFC_SAMPLING_H

#include <vector>

#include "cliffc/canonical.h"
#include "cliffc/random_source.h"

namespace cliffc {

/// Exact non-negative rational number; equality is by cross multiplication.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    double value() const {
        return (double)num / (double)den;
    }
    bool operator==(const Rational &other) const {
        return (unsigned __int128)num * other.den == (unsigned __int128)other.num * den;
    }
};

struct QMallowsSample {
    BitVector h;
    Permutation perm;
    bool operator==(const QMallowsSample &other) const = default;
};

/// (h, S) with probability 2^{I_n(h,S)} / prod_{i=1}^n (4^i - 1).
QMallowsSample sample_qmallows(size_t n, RandomSource &rng);
/// S with probability 2^{I_n(S)} / prod_{j=1}^n (2^j - 1).
Permutation sample_mallows(size_t n, RandomSource &rng);

/// Random-bit accounting for one random_clifford call.
struct CliffordBitReport {
    uint64_t qmallows_bits = 0;        // All bits spent drawing (h, S), rejections included.
    uint64_t qmallows_rejected_bits = 0;
    uint64_t bernoulli_bits = 0;       // Fair coins for Gamma', Delta', Gamma, Delta and O'.
    uint64_t expected_bernoulli_bits = 0;  // n^2 + 2n + I_n(h, S).
};

/// Uniformly random Clifford operator, returned in canonical form. O(n^2).
CanonicalForm random_clifford(size_t n, RandomSource &rng, CliffordBitReport *report = nullptr);

struct LsrDecomposition {
    BitMatrix l;
    Permutation perm;
    BitMatrix r;
};

/// L uniform lower unit triangular, S Mallows, R uniform among lower unit triangular
/// matrices with R_ij = 0 whenever S(i) > S(j).
LsrDecomposition sample_lsr(size_t n, RandomSource &rng);
/// L * S * R for the sample above, where S has ones at (S(i), i).
BitMatrix lsr_product(const LsrDecomposition &lsr);
/// Uniformly random invertible matrix.
BitMatrix random_gl(size_t n, RandomSource &rng);

struct QMallowsEntry {
    BitVector h;
    Permutation perm;
    int64_t weight;  // I_n(h, S).
    Rational probability;
};

/// All 2^n n! pairs (h, S) with exact probabilities. Throws TooLarge for n > 6.
std::vector<QMallowsEntry> exact_qmallows_pmf(size_t n);
/// Probability that sample_qmallows outputs (h, S), from the per-step draw probabilities.
Rational qmallows_sampler_probability(const BitVector &h, const Permutation &perm);
/// 2^{I_n(S)} / prod (2^j - 1).
Rational mallows_probability(const Permutation &perm);
/// Probability that sample_mallows outputs S, from the per-step draw probabilities.
Rational mallows_sampler_probability(const Permutation &perm);

/// prod_{i=1}^n (4^i - 1); throws TooLarge when it does not fit in 64 bits.
uint64_t symplectic_factor(size_t n);
/// log2 |C_n| = n^2 + 2n + sum_i log2(4^i - 1), for any n.
double log2_clifford_order(size_t n);
/// log2 |GL(n)| = sum_{j=0}^{n-1} log2(2^n - 2^j).
double log2_gl_order(size_t n);

}  // namespace cliffc

#endif
