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

#include "cliffc/bit_matrix.h"

#include <algorithm>
#include <bit>

namespace cliffc {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) >> 6;
}

void require(bool condition, ErrorKind kind, const char *message) {
    if (!condition) {
        throw Error(kind, message);
    }
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::Singular:
            return "Singular";
        case ErrorKind::Inconsistent:
            return "Inconsistent";
        case ErrorKind::Underdetermined:
            return "Underdetermined";
        case ErrorKind::NotBorel:
            return "NotBorel";
        case ErrorKind::NotHFree:
            return "NotHFree";
        case ErrorKind::InvalidTableau:
            return "InvalidTableau";
        case ErrorKind::NotNonEntangling:
            return "NotNonEntangling";
        case ErrorKind::NoSolution:
            return "NoSolution";
        case ErrorKind::NonUniqueSolution:
            return "NonUniqueSolution";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::BadBlockPattern:
            return "BadBlockPattern";
        case ErrorKind::NotSymmetric:
            return "NotSymmetric";
        case ErrorKind::NotCnotCircuit:
            return "NotCnotCircuit";
        case ErrorKind::Parse:
            return "Parse";
        case ErrorKind::Internal:
            return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require(other.num_bits_ == num_bits_, ErrorKind::DimensionMismatch, "BitVector ^= size");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require(other.num_bits_ == num_bits_, ErrorKind::DimensionMismatch, "BitVector &= size");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector r = *this;
    r &= other;
    return r;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    require(other.num_bits_ == num_bits_, ErrorKind::DimensionMismatch, "BitVector dot size");
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::optional<size_t> BitVector::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return std::nullopt;
}

std::optional<size_t> BitVector::last_one() const {
    for (size_t k = words_.size(); k-- > 0;) {
        if (words_[k]) {
            return k * 64 + 63 - std::countl_zero(words_[k]);
        }
    }
    return std::nullopt;
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

BitVector BitVector::from_str(std::string_view text) {
    BitVector v(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            v.set(k, true);
        } else if (text[k] != '0') {
            throw Error(ErrorKind::Parse, "bit string contains a character other than 0/1");
        }
    }
    return v;
}

BitVector BitVector::unit(size_t num_bits, size_t k) {
    BitVector v(num_bits);
    v.set(k, true);
    return v;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols)
    : num_rows_(num_rows), num_cols_(num_cols), stride_(words_for(num_cols)), data_(num_rows * stride_, 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != cols) {
            throw Error(ErrorKind::Parse, "matrix rows have different lengths");
        }
        m.set_row(i, BitVector::from_str(rows[i]));
    }
    return m;
}

BitVector BitMatrix::row(size_t i) const {
    BitVector v(num_cols_);
    std::copy(row_words(i), row_words(i) + stride_, v.words());
    return v;
}

BitVector BitMatrix::col(size_t j) const {
    BitVector v(num_rows_);
    for (size_t i = 0; i < num_rows_; i++) {
        if (get(i, j)) {
            v.set(i, true);
        }
    }
    return v;
}

void BitMatrix::set_row(size_t i, const BitVector &v) {
    require(v.size() == num_cols_, ErrorKind::DimensionMismatch, "set_row length");
    std::copy(v.words(), v.words() + stride_, row_words(i));
}

void BitMatrix::set_col(size_t j, const BitVector &v) {
    require(v.size() == num_rows_, ErrorKind::DimensionMismatch, "set_col length");
    for (size_t i = 0; i < num_rows_; i++) {
        set(i, j, v.get(i));
    }
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    uint64_t *d = row_words(dst);
    const uint64_t *s = row_words(src);
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a != b) {
        std::swap_ranges(row_words(a), row_words(a) + stride_, row_words(b));
    }
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &other) {
    require(
        other.num_rows_ == num_rows_ && other.num_cols_ == num_cols_, ErrorKind::DimensionMismatch, "matrix ^= shape");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] ^= other.data_[k];
    }
    return *this;
}

BitMatrix BitMatrix::operator^(const BitMatrix &other) const {
    BitMatrix r = *this;
    r ^= other;
    return r;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitMatrix::popcount() const {
    size_t total = 0;
    for (uint64_t w : data_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(num_rows_);
    for (size_t i = 0; i < num_rows_; i++) {
        out.push_back(row(i).str());
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto &r : row_strings()) {
        out += r;
        out += '\n';
    }
    return out;
}

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw Error(ErrorKind::OutOfRange, "permutation images are not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(size_t n) {
    std::vector<uint32_t> images(n);
    for (size_t i = 0; i < n; i++) {
        images[i] = (uint32_t)i;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> inv(images_.size());
    for (size_t i = 0; i < images_.size(); i++) {
        inv[images_[i]] = (uint32_t)i;
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation &other) const {
    require(other.size() == size(), ErrorKind::DimensionMismatch, "permutation product size");
    std::vector<uint32_t> out(size());
    for (size_t i = 0; i < size(); i++) {
        out[i] = images_[other.images_[i]];
    }
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); i++) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

BitMatrix Permutation::to_matrix() const {
    BitMatrix m(size(), size());
    for (size_t i = 0; i < size(); i++) {
        m.set(images_[i], i, true);
    }
    return m;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    require(a.num_cols() == b.num_rows(), ErrorKind::DimensionMismatch, "mat_mul inner dimensions");
    BitMatrix c(a.num_rows(), b.num_cols());
    size_t stride = c.words_per_row();
    for (size_t i = 0; i < a.num_rows(); i++) {
        uint64_t *out = c.row_words(i);
        const uint64_t *ar = a.row_words(i);
        for (size_t w = 0; w < a.words_per_row(); w++) {
            uint64_t bits = ar[w];
            while (bits) {
                size_t k = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const uint64_t *br = b.row_words(k);
                for (size_t t = 0; t < stride; t++) {
                    out[t] ^= br[t];
                }
            }
        }
    }
    return c;
}

BitVector mat_vec(const BitMatrix &a, const BitVector &v) {
    require(a.num_cols() == v.size(), ErrorKind::DimensionMismatch, "mat_vec dimensions");
    BitVector out(a.num_rows());
    for (size_t i = 0; i < a.num_rows(); i++) {
        uint64_t acc = 0;
        const uint64_t *r = a.row_words(i);
        for (size_t w = 0; w < a.words_per_row(); w++) {
            acc ^= r[w] & v.words()[w];
        }
        if (std::popcount(acc) & 1) {
            out.set(i, true);
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix &a) {
    BitMatrix t(a.num_cols(), a.num_rows());
    for (size_t i = 0; i < a.num_rows(); i++) {
        const uint64_t *r = a.row_words(i);
        for (size_t w = 0; w < a.words_per_row(); w++) {
            uint64_t bits = r[w];
            while (bits) {
                size_t j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                t.set(j, i, true);
            }
        }
    }
    return t;
}

std::optional<BitMatrix> try_mat_inv(const BitMatrix &a) {
    require(a.num_rows() == a.num_cols(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    size_t n = a.num_rows();
    BitMatrix m = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        m.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        for (size_t r = 0; r < n; r++) {
            if (r != c && m.get(r, c)) {
                m.xor_row(r, c);
                inv.xor_row(r, c);
            }
        }
    }
    return inv;
}

BitMatrix mat_inv(const BitMatrix &a) {
    auto inv = try_mat_inv(a);
    if (!inv.has_value()) {
        throw Error(ErrorKind::Singular, "matrix is not invertible over GF(2)");
    }
    return std::move(*inv);
}

size_t rank(const BitMatrix &a) {
    BitMatrix m = a;
    size_t r = 0;
    for (size_t c = 0; c < m.num_cols() && r < m.num_rows(); c++) {
        size_t pivot = r;
        while (pivot < m.num_rows() && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.num_rows()) {
            continue;
        }
        m.swap_rows(r, pivot);
        for (size_t k = r + 1; k < m.num_rows(); k++) {
            if (m.get(k, c)) {
                m.xor_row(k, r);
            }
        }
        r++;
    }
    return r;
}

BitVector solve_linear(const BitMatrix &a, const BitVector &b) {
    require(a.num_rows() == b.size(), ErrorKind::DimensionMismatch, "solve_linear right-hand side length");
    size_t rows = a.num_rows();
    size_t cols = a.num_cols();
    // Augmented matrix; the last column holds b.
    BitMatrix m(rows, cols + 1);
    for (size_t i = 0; i < rows; i++) {
        std::copy(a.row_words(i), a.row_words(i) + a.words_per_row(), m.row_words(i));
        m.set(i, cols, b.get(i));
    }
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t pivot = r;
        while (pivot < rows && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        m.swap_rows(r, pivot);
        for (size_t k = 0; k < rows; k++) {
            if (k != r && m.get(k, c)) {
                m.xor_row(k, r);
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    for (size_t k = r; k < rows; k++) {
        if (m.get(k, cols)) {
            throw Error(ErrorKind::Inconsistent, "linear system has no solution");
        }
    }
    if (r < cols) {
        throw Error(ErrorKind::Underdetermined, "linear system has more than one solution");
    }
    BitVector x(cols);
    for (size_t k = 0; k < r; k++) {
        x.set(pivot_cols[k], m.get(k, cols));
    }
    return x;
}

bool is_lower_unit_triangular(const BitMatrix &a) {
    if (a.num_rows() != a.num_cols()) {
        return false;
    }
    for (size_t i = 0; i < a.num_rows(); i++) {
        if (!a.get(i, i)) {
            return false;
        }
        for (size_t j = i + 1; j < a.num_cols(); j++) {
            if (a.get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool is_symmetric(const BitMatrix &a) {
    return a.num_rows() == a.num_cols() && transpose(a) == a;
}

RankSet::RankSet(size_t n) : tree_(n + 1, 0), count_(n), top_bit_(1) {
    while (top_bit_ * 2 <= n) {
        top_bit_ *= 2;
    }
    for (size_t i = 1; i <= n; i++) {
        tree_[i] += 1;
        size_t parent = i + (i & (~i + 1));
        if (parent <= n) {
            tree_[parent] += tree_[i];
        }
    }
}

size_t RankSet::kth_smallest(size_t k) const {
    if (k == 0 || k > count_) {
        throw Error(ErrorKind::OutOfRange, "rank query outside the remaining set");
    }
    size_t pos = 0;
    size_t remaining = k;
    for (size_t step = top_bit_; step > 0; step >>= 1) {
        size_t next = pos + step;
        if (next < tree_.size() && tree_[next] < remaining) {
            pos = next;
            remaining -= tree_[next];
        }
    }
    return pos;  // 1-based position pos+1 maps to element pos.
}

void RankSet::erase(size_t x) {
    for (size_t i = x + 1; i < tree_.size(); i += i & (~i + 1)) {
        tree_[i] -= 1;
    }
    count_--;
}

size_t RankSet::count_less(size_t x) const {
    size_t total = 0;
    for (size_t i = x; i > 0; i -= i & (~i + 1)) {
        total += tree_[i];
    }
    return total;
}

uint64_t inversion_number(const Permutation &perm) {
    size_t n = perm.size();
    RankSet remaining(n);
    uint64_t total = 0;
    // Scanning left to right, every remaining value below S(i) forms an inversion with i.
    for (size_t i = 0; i < n; i++) {
        total += remaining.count_less(perm(i));
        remaining.erase(perm(i));
    }
    return total;
}

}  // namespace cliffc
