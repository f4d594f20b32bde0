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

#ifndef CLIFFC_BIT_MATRIX_H
#define CLIFFC_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffc/error.h"

// Indexing convention: storage and every API in this library is 0-based.
// Text encodings (bit strings, circuit files, JSON permutations) are 1-based
// where the format says so; the conversion happens in the parsers/printers only.

namespace cliffc {

/// A fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    uint64_t *words() {
        return words_.data();
    }
    const uint64_t *words() const {
        return words_.data();
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    bool operator[](size_t k) const {
        return get(k);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    size_t popcount() const;
    bool any() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector &other) const;
    std::optional<size_t> first_one() const;
    std::optional<size_t> last_one() const;
    void clear();

    /// Characters '0'/'1', index 0 first.
    std::string str() const;
    static BitVector from_str(std::string_view text);
    static BitVector unit(size_t num_bits, size_t k);

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over GF(2) with bit-packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// Rows given as '0'/'1' strings, column 0 first.
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    size_t num_rows() const {
        return num_rows_;
    }
    size_t num_cols() const {
        return num_cols_;
    }
    size_t words_per_row() const {
        return stride_;
    }

    bool get(size_t i, size_t j) const {
        return (data_[i * stride_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(size_t i, size_t j, bool value) {
        uint64_t &w = data_[i * stride_ + (j >> 6)];
        uint64_t m = uint64_t{1} << (j & 63);
        w = value ? (w | m) : (w & ~m);
    }
    void flip(size_t i, size_t j) {
        data_[i * stride_ + (j >> 6)] ^= uint64_t{1} << (j & 63);
    }

    uint64_t *row_words(size_t i) {
        return data_.data() + i * stride_;
    }
    const uint64_t *row_words(size_t i) const {
        return data_.data() + i * stride_;
    }
    BitVector row(size_t i) const;
    BitVector col(size_t j) const;
    void set_row(size_t i, const BitVector &v);
    void set_col(size_t j, const BitVector &v);
    /// row[dst] ^= row[src].
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    bool operator==(const BitMatrix &other) const = default;
    BitMatrix &operator^=(const BitMatrix &other);
    BitMatrix operator^(const BitMatrix &other) const;

    bool is_zero() const;
    size_t popcount() const;
    std::vector<std::string> row_strings() const;
    std::string str() const;

   private:
    size_t num_rows_ = 0;
    size_t num_cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// A permutation of {0..n-1}; `(*this)(i)` is the image S(i).
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> images);
    static Permutation identity(size_t n);

    size_t size() const {
        return images_.size();
    }
    uint32_t operator()(size_t i) const {
        return images_[i];
    }
    const std::vector<uint32_t> &images() const {
        return images_;
    }
    Permutation inverse() const;
    /// (a * b)(i) = a(b(i)).
    Permutation operator*(const Permutation &other) const;
    bool operator==(const Permutation &other) const = default;
    bool is_identity() const;
    /// Matrix with entry (S(i), i) set.
    BitMatrix to_matrix() const;

   private:
    std::vector<uint32_t> images_;
};

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
BitVector mat_vec(const BitMatrix &a, const BitVector &v);
BitMatrix transpose(const BitMatrix &a);
BitMatrix mat_inv(const BitMatrix &a);
std::optional<BitMatrix> try_mat_inv(const BitMatrix &a);
size_t rank(const BitMatrix &a);
/// Unique solution x of A x = b. Throws Inconsistent or Underdetermined.
BitVector solve_linear(const BitMatrix &a, const BitVector &b);

bool is_lower_unit_triangular(const BitMatrix &a);
bool is_symmetric(const BitMatrix &a);

/// Number of pairs i<j with S(i)>S(j).
uint64_t inversion_number(const Permutation &perm);

/// Order-statistics set over {0..n-1} supporting removal and k-th element queries.
class RankSet {
   public:
    explicit RankSet(size_t n);
    size_t size() const {
        return count_;
    }
    /// k-th smallest remaining element, k in [1, size()].
    size_t kth_smallest(size_t k) const;
    size_t kth_largest(size_t k) const {
        return kth_smallest(count_ + 1 - k);
    }
    void erase(size_t x);
    /// Number of remaining elements strictly less than x.
    size_t count_less(size_t x) const;

   private:
    std::vector<uint32_t> tree_;
    size_t count_;
    size_t top_bit_;
};

}  // namespace cliffc

#endif
