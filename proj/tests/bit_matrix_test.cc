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
#include <random>

#include "gtest/gtest.h"

using namespace cliffc;

namespace {

BitMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
    BitMatrix m(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

}  // namespace

TEST(bit_vector, str_round_trip_and_bits) {
    BitVector v = BitVector::from_str("0110");
    ASSERT_EQ(v.size(), 4);
    ASSERT_FALSE(v.get(0));
    ASSERT_TRUE(v.get(1));
    ASSERT_EQ(v.str(), "0110");
    ASSERT_EQ(v.popcount(), 2);
    ASSERT_EQ(v.first_one(), 1);
    ASSERT_EQ(v.last_one(), 2);
    ASSERT_THROW(BitVector::from_str("01x"), Error);
}

TEST(bit_vector, wide_vectors_span_words) {
    BitVector a(130);
    BitVector b(130);
    a.set(3, true);
    a.set(129, true);
    b.set(129, true);
    b.set(64, true);
    ASSERT_TRUE(a.dot(b));
    ASSERT_EQ((a ^ b).popcount(), 2);
    ASSERT_EQ((a & b).popcount(), 1);
    ASSERT_EQ(a.last_one(), 129);
}

TEST(bit_matrix, inverse_of_random_invertible) {
    std::mt19937_64 rng(5);
    for (size_t n : {1, 2, 5, 17, 70}) {
        int found = 0;
        while (found < 3) {
            BitMatrix m = random_matrix(n, n, rng);
            auto inv = try_mat_inv(m);
            if (rank(m) < n) {
                ASSERT_FALSE(inv.has_value());
                ASSERT_THROW(mat_inv(m), Error);
                continue;
            }
            ASSERT_TRUE(inv.has_value());
            ASSERT_EQ(mat_mul(m, *inv), BitMatrix::identity(n));
            ASSERT_EQ(mat_mul(*inv, m), BitMatrix::identity(n));
            found++;
        }
    }
}

TEST(bit_matrix, transpose_and_product_rules) {
    std::mt19937_64 rng(6);
    BitMatrix a = random_matrix(4, 7, rng);
    BitMatrix b = random_matrix(7, 3, rng);
    ASSERT_EQ(transpose(mat_mul(a, b)), mat_mul(transpose(b), transpose(a)));
    BitVector v(3);
    v.set(1, true);
    ASSERT_EQ(mat_vec(mat_mul(a, b), v), mat_vec(a, mat_vec(b, v)));
    ASSERT_THROW(mat_mul(a, a), Error);
}

TEST(bit_matrix, solve_linear) {
    BitMatrix a = BitMatrix::from_rows({"110", "011", "001"});
    BitVector b = BitVector::from_str("101");
    BitVector x = solve_linear(a, b);
    ASSERT_EQ(mat_vec(a, x), b);

    BitMatrix singular = BitMatrix::from_rows({"11", "11"});
    try {
        solve_linear(singular, BitVector::from_str("10"));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::Inconsistent);
    }
    try {
        solve_linear(singular, BitVector::from_str("11"));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::Underdetermined);
    }
}

TEST(bit_matrix, shape_predicates) {
    ASSERT_TRUE(is_lower_unit_triangular(BitMatrix::from_rows({"100", "110", "011"})));
    ASSERT_FALSE(is_lower_unit_triangular(BitMatrix::from_rows({"110", "010", "001"})));
    ASSERT_TRUE(is_symmetric(BitMatrix::from_rows({"01", "10"})));
    ASSERT_FALSE(is_symmetric(BitMatrix::from_rows({"01", "00"})));
}

TEST(permutation, composition_inverse_matrix) {
    Permutation a({2, 0, 1});
    Permutation b({1, 2, 0});
    ASSERT_EQ((a * b)(0), a(b(0)));
    ASSERT_TRUE((a * a.inverse()).is_identity());
    ASSERT_EQ(mat_mul(a.to_matrix(), b.to_matrix()), (a * b).to_matrix());
    ASSERT_TRUE(a.to_matrix().get(a(1), 1));
    ASSERT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(permutation, inversion_number_matches_brute_force) {
    std::vector<uint32_t> p = {0, 1, 2, 3, 4};
    do {
        uint64_t brute = 0;
        for (size_t i = 0; i < p.size(); i++) {
            for (size_t j = i + 1; j < p.size(); j++) {
                brute += p[i] > p[j];
            }
        }
        ASSERT_EQ(inversion_number(Permutation(p)), brute);
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(rank_set, order_statistics) {
    std::mt19937_64 rng(9);
    for (size_t n : {1, 2, 7, 33}) {
        RankSet s(n);
        std::vector<size_t> ref(n);
        for (size_t i = 0; i < n; i++) {
            ref[i] = i;
        }
        while (!ref.empty()) {
            ASSERT_EQ(s.size(), ref.size());
            for (size_t k = 1; k <= ref.size(); k++) {
                ASSERT_EQ(s.kth_smallest(k), ref[k - 1]);
                ASSERT_EQ(s.kth_largest(k), ref[ref.size() - k]);
            }
            for (size_t x = 0; x < n; x++) {
                size_t less = std::count_if(ref.begin(), ref.end(), [&](size_t y) { return y < x; });
                ASSERT_EQ(s.count_less(x), less);
            }
            size_t pick = rng() % ref.size();
            s.erase(ref[pick]);
            ref.erase(ref.begin() + (ptrdiff_t)pick);
        }
    }
}
