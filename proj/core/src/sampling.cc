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

#include "cliffc/sampling.h"

#include <algorithm>
#include <cmath>

namespace cliffc {

namespace {

void require_positive(size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::OutOfRange, "sampler needs at least one qubit");
    }
}

// Rank of `value` among the remaining elements, counted from the smallest (1-based).
size_t rank_from_bottom(const RankSet &remaining, size_t value) {
    return remaining.count_less(value) + 1;
}

uint64_t checked_pow2(uint64_t e) {
    if (e >= 64) {
        throw Error(ErrorKind::TooLarge, "exact probability does not fit in 64 bits");
    }
    return uint64_t{1} << e;
}

}  // namespace

QMallowsSample sample_qmallows(size_t n, RandomSource &rng) {
    require_positive(n);
    QMallowsSample out{BitVector(n), Permutation()};
    std::vector<uint32_t> images(n);
    RankSet remaining(n);
    for (size_t i = 0; i < n; i++) {
        uint64_t m = remaining.size();
        // Index a has probability 2^{2m-a} / (4^m - 1); the first m indices carry h = 1.
        uint64_t a = rng.truncated_geometric(2 * m);
        bool h = a <= m;
        uint64_t k = h ? a : 2 * m + 1 - a;
        size_t j = remaining.kth_smallest(k);
        out.h.set(i, h);
        images[i] = (uint32_t)j;
        remaining.erase(j);
    }
    out.perm = Permutation(std::move(images));
    return out;
}

Permutation sample_mallows(size_t n, RandomSource &rng) {
    require_positive(n);
    std::vector<uint32_t> images(n);
    RankSet remaining(n);
    for (size_t i = 0; i < n; i++) {
        uint64_t m = remaining.size();
        // k has probability 2^{k-1} / (2^m - 1).
        uint64_t k = m + 1 - rng.truncated_geometric(m);
        size_t j = remaining.kth_smallest(k);
        images[i] = (uint32_t)j;
        remaining.erase(j);
    }
    return Permutation(std::move(images));
}

CanonicalForm random_clifford(size_t n, RandomSource &rng, CliffordBitReport *report) {
    require_positive(n);
    uint64_t bits0 = rng.bits_consumed();
    uint64_t rejected0 = rng.rejected_bits();
    QMallowsSample hs = sample_qmallows(n, rng);
    uint64_t bits1 = rng.bits_consumed();

    const BitVector &h = hs.h;
    const Permutation &perm = hs.perm;
    CanonicalForm cf;
    cf.gamma = BitMatrix(n, n);
    cf.delta = BitMatrix::identity(n);
    cf.gamma_prime = BitMatrix(n, n);
    cf.delta_prime = BitMatrix::identity(n);
    for (size_t i = 0; i < n; i++) {
        cf.gamma_prime.set(i, i, rng.bit());
        if (h.get(i)) {
            cf.gamma.set(i, i, rng.bit());
        }
    }
    for (size_t j = 0; j < n; j++) {
        for (size_t i = j + 1; i < n; i++) {
            bool b = rng.bit();
            cf.gamma_prime.set(i, j, b);
            cf.gamma_prime.set(j, i, b);
            cf.delta_prime.set(i, j, rng.bit());
            if (rule_allows_gamma(h, perm, i, j)) {
                b = rng.bit();
                cf.gamma.set(i, j, b);
                cf.gamma.set(j, i, b);
            }
            if (rule_allows_delta(h, perm, i, j)) {
                cf.delta.set(i, j, rng.bit());
            }
        }
    }
    cf.pauli_prime = PauliOp(n);
    for (size_t i = 0; i < n; i++) {
        cf.pauli_prime.xs.set(i, rng.bit());
        cf.pauli_prime.zs.set(i, rng.bit());
    }
    if (report != nullptr) {
        report->qmallows_bits = bits1 - bits0;
        report->qmallows_rejected_bits = rng.rejected_bits() - rejected0;
        report->bernoulli_bits = rng.bits_consumed() - bits1;
        report->expected_bernoulli_bits = (uint64_t)((int64_t)(n * n + 2 * n) + qmallows_weight(h, perm));
    }
    cf.h = std::move(hs.h);
    cf.perm = std::move(hs.perm);
    return cf;
}

LsrDecomposition sample_lsr(size_t n, RandomSource &rng) {
    require_positive(n);
    LsrDecomposition out{BitMatrix::identity(n), sample_mallows(n, rng), BitMatrix::identity(n)};
    for (size_t j = 0; j < n; j++) {
        for (size_t i = j + 1; i < n; i++) {
            out.l.set(i, j, rng.bit());
            if (out.perm(i) < out.perm(j)) {
                out.r.set(i, j, rng.bit());
            }
        }
    }
    return out;
}

BitMatrix lsr_product(const LsrDecomposition &lsr) {
    return mat_mul(lsr.l, mat_mul(lsr.perm.to_matrix(), lsr.r));
}

BitMatrix random_gl(size_t n, RandomSource &rng) {
    return lsr_product(sample_lsr(n, rng));
}

uint64_t symplectic_factor(size_t n) {
    unsigned __int128 total = 1;
    for (size_t i = 1; i <= n; i++) {
        total *= (unsigned __int128)checked_pow2(2 * i) - 1;
        if (total >> 64) {
            throw Error(ErrorKind::TooLarge, "product of (4^i - 1) exceeds 64 bits");
        }
    }
    return (uint64_t)total;
}

std::vector<QMallowsEntry> exact_qmallows_pmf(size_t n) {
    if (n == 0 || n > 6) {
        throw Error(ErrorKind::TooLarge, "exact quantum Mallows table supports 1 <= n <= 6");
    }
    uint64_t den = symplectic_factor(n);
    std::vector<QMallowsEntry> out;
    std::vector<uint32_t> images(n);
    for (size_t i = 0; i < n; i++) {
        images[i] = (uint32_t)i;
    }
    do {
        Permutation perm(images);
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
            BitVector h(n);
            for (size_t i = 0; i < n; i++) {
                h.set(i, (bits >> i) & 1);
            }
            int64_t w = qmallows_weight(h, perm);
            out.push_back({std::move(h), perm, w, Rational{checked_pow2((uint64_t)w), den}});
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Rational qmallows_sampler_probability(const BitVector &h, const Permutation &perm) {
    size_t n = perm.size();
    RankSet remaining(n);
    uint64_t exponent = 0;
    for (size_t i = 0; i < n; i++) {
        uint64_t m = remaining.size();
        uint64_t k = rank_from_bottom(remaining, perm(i));
        uint64_t a = h.get(i) ? k : 2 * m + 1 - k;
        exponent += 2 * m - a;
        remaining.erase(perm(i));
    }
    return Rational{checked_pow2(exponent), symplectic_factor(n)};
}

Rational mallows_probability(const Permutation &perm) {
    size_t n = perm.size();
    uint64_t den = 1;
    for (size_t j = 1; j <= n; j++) {
        den *= checked_pow2(j) - 1;
    }
    return Rational{checked_pow2(inversion_number(perm)), den};
}

Rational mallows_sampler_probability(const Permutation &perm) {
    size_t n = perm.size();
    RankSet remaining(n);
    uint64_t exponent = 0;
    uint64_t den = 1;
    for (size_t i = 0; i < n; i++) {
        uint64_t m = remaining.size();
        uint64_t k = rank_from_bottom(remaining, perm(i));
        exponent += k - 1;
        den *= checked_pow2(m) - 1;
        remaining.erase(perm(i));
    }
    return Rational{checked_pow2(exponent), den};
}

double log2_clifford_order(size_t n) {
    double total = (double)(n * n + 2 * n);
    for (size_t i = 1; i <= n; i++) {
        total += 2.0 * (double)i + std::log1p(-std::ldexp(1.0, -2 * (int)i)) / std::log(2.0);
    }
    return total;
}

double log2_gl_order(size_t n) {
    double total = 0;
    for (size_t j = 0; j < n; j++) {
        total += (double)n + std::log1p(-std::ldexp(1.0, (int)j - (int)n)) / std::log(2.0);
    }
    return total;
}

}  // namespace cliffc
