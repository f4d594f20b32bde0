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

#include "cliffc/cnot_advantage.h"

#include <algorithm>
#include <random>

#include "cliffc/sampling.h"
#include "dense_oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cliffc;
using namespace cliffc::testing;

namespace {

BitVector mask(size_t n, uint32_t bits) {
    BitVector v(n);
    for (size_t q = 0; q < n; q++) {
        v.set(q, (bits >> q) & 1);
    }
    return v;
}

Tableau sandwich(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    return compose(from_circuit(hadamard_layer(b)), compose(linear_tableau(u), from_circuit(hadamard_layer(a))));
}

Circuit example1() {
    return parse_circuit(read_fixture("example1.txt"));
}

}  // namespace

TEST(cnot_advantage, circuit_matrix) {
    Circuit c = parse_circuit("cnot 1 2\ncnot 2 3\n");
    BitMatrix u = cnot_circuit_matrix(c);
    ASSERT_EQ(u, BitMatrix::from_rows({"100", "110", "111"}));
    ASSERT_EQ(linear_tableau(u), from_circuit(c));
    try {
        cnot_circuit_matrix(parse_circuit("h 1\n"));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotCnotCircuit);
    }
}

TEST(cnot_advantage, subspace_trivial_cases) {
    BitMatrix eye = BitMatrix::identity(3);
    ASSERT_TRUE(subspace_image_matches(eye, BitVector(3), BitVector(3)));
    ASSERT_TRUE(subspace_image_matches(eye, mask(3, 5), mask(3, 5)));
    ASSERT_FALSE(subspace_image_matches(eye, mask(3, 1), mask(3, 2)));
    ASSERT_FALSE(subspace_image_matches(eye, mask(3, 1), mask(3, 3)));
    ASSERT_TRUE(sandwich_is_hfree(eye, mask(3, 7), mask(3, 7)));
    ASSERT_TRUE(sandwich_is_identity(eye, BitVector(3), BitVector(3)));
    try {
        subspace_image_matches(BitMatrix::from_rows({"11", "11"}), mask(2, 1), mask(2, 1));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(cnot_advantage, example1_window_satisfies_both_conditions) {
    Circuit c = example1();
    Circuit window(4);
    window.gates.assign(c.gates.begin() + 1, c.gates.end());
    BitMatrix u = cnot_circuit_matrix(window);
    BitVector a = BitVector::from_str("0001");
    BitVector b = BitVector::from_str("0010");
    ASSERT_TRUE(subspace_image_matches(u, a, b));
    ASSERT_TRUE(sandwich_is_identity(u, a, b));
    ASSERT_EQ(sandwich(u, a, b), linear_tableau(u));
}

TEST(cnot_advantage, hfree_criterion_matches_tableau_oracle) {
    std::mt19937_64 rng(41);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < (n == 4 ? 100 : 20); trial++) {
            RandomSource src(rng(), 0);
            BitMatrix u = random_gl(n, src);
            for (uint32_t ab = 0; ab < (1u << (2 * n)); ab++) {
                BitVector a = mask(n, ab & ((1u << n) - 1));
                BitVector b = mask(n, ab >> n);
                ASSERT_EQ(sandwich_is_hfree(u, a, b), try_tableau_to_hfree(sandwich(u, a, b)).has_value());
            }
        }
    }
}

TEST(cnot_advantage, identity_criterion_is_sound_n3_exhaustive) {
    CnotCostTable table = cnot_cost_oracle(3);
    size_t holds = 0;
    for (const auto &[key, cost] : table.costs()) {
        BitMatrix u = table.unpack(key);
        for (uint32_t ab = 0; ab < 64; ab++) {
            BitVector a = mask(3, ab & 7);
            BitVector b = mask(3, ab >> 3);
            if (sandwich_is_identity(u, a, b)) {
                holds++;
                ASSERT_EQ(sandwich(u, a, b), linear_tableau(u));
            }
        }
    }
    ASSERT_GT(holds, 168);
}

TEST(cnot_advantage, identity_criterion_is_sound_n4_random) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; trial++) {
        RandomSource src(rng(), 0);
        BitMatrix u = random_gl(4, src);
        for (uint32_t ab = 0; ab < 256; ab++) {
            BitVector a = mask(4, ab & 15);
            BitVector b = mask(4, ab >> 4);
            if (sandwich_is_identity(u, a, b)) {
                ASSERT_EQ(sandwich(u, a, b), linear_tableau(u));
            }
        }
    }
}

TEST(cnot_advantage, example1_rewrite_saves_one_gate) {
    Circuit c = example1();
    RewriteResult r = example1_rewrite(c);
    ASSERT_EQ(r.input_2q, 8);
    ASSERT_EQ(r.output_2q, 7);
    ASSERT_EQ(r.windows_applied, 1);
    ASSERT_EQ(from_circuit(r.circuit), from_circuit(c));
    Circuit expected = parse_circuit(
        "# qubits: 4\nh 4\np 1\np 4\ncnot 4 1\npdg 1\ncnot 1 2\ncnot 2 1\ncnot 2 3\ncnot 3 2\ncnot 3 4\ncnot 4 3\nh 3\n");
    ASSERT_EQ(r.circuit, expected);
}

TEST(cnot_advantage, rewrite_leaves_short_circuits_alone) {
    Circuit one = parse_circuit("cnot 1 2\n");
    RewriteResult r = example1_rewrite(one);
    ASSERT_EQ(r.circuit, one);
    ASSERT_EQ(r.windows_applied, 0);
    try {
        example1_rewrite(parse_circuit("cnot 1 2\nh 1\n"));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotCnotCircuit);
    }
}

TEST(cnot_advantage, rewrite_preserves_tableau_on_random_circuits) {
    std::mt19937_64 rng(43);
    size_t improved = 0;
    for (int trial = 0; trial < 40; trial++) {
        Circuit c = random_circuit(5, 6 + trial % 10, rng, true);
        RewriteResult r = example1_rewrite(c);
        ASSERT_EQ(from_circuit(r.circuit), from_circuit(c));
        ASSERT_LE(r.output_2q, r.input_2q);
        ASSERT_EQ(r.output_2q, r.circuit.two_qubit_count());
        if (r.windows_applied == 0) {
            ASSERT_EQ(r.circuit.gates, c.gates);
        } else {
            ASSERT_LE(r.output_2q + r.windows_applied, r.input_2q);
        }
        improved += r.windows_applied > 0;
    }
    RecordProperty("improved_circuits", (int)improved);
}

TEST(cnot_advantage, gstar_swap_uses_two_gates) {
    BitMatrix swap = BitMatrix::from_rows({"01", "10"});
    GStarCircuit g = gstar_symmetric_circuit(swap);
    ASSERT_EQ(g.two_qubit_count, 2);
    ASSERT_TRUE(unitary_is_linear_up_to_phases(circuit_unitary(g.circuit), swap));
}

TEST(cnot_advantage, gstar_identity_has_no_entangling_gates) {
    GStarCircuit g = gstar_symmetric_circuit(BitMatrix::identity(4));
    ASSERT_EQ(g.two_qubit_count, 0);
    ASSERT_EQ(from_circuit(g.circuit).xs[0].xs, BitVector::unit(4, 0));
}

TEST(cnot_advantage, gstar_random_symmetric) {
    std::mt19937_64 rng(44);
    for (size_t n = 1; n <= 5; n++) {
        for (int trial = 0; trial < 20; trial++) {
            BitMatrix a = random_symmetric_invertible(n, rng);
            BitMatrix a_inv = mat_inv(a);
            GStarCircuit g = gstar_symmetric_circuit(a);
            size_t formula = 0;
            for (size_t i = 0; i < n; i++) {
                for (size_t j = i + 1; j < n; j++) {
                    formula += a.get(i, j) + a_inv.get(i, j);
                }
            }
            ASSERT_EQ(g.two_qubit_count, formula);
            ASSERT_EQ(g.circuit.two_qubit_count(), formula);
            // X images carry the linear map; Z images stay diagonal.
            Tableau t = from_circuit(g.circuit);
            BitMatrix dual = transpose(a_inv);
            for (size_t i = 0; i < n; i++) {
                ASSERT_EQ(t.xs[i].xs, a.col(i));
                ASSERT_FALSE(t.zs[i].xs.any());
                ASSERT_EQ(t.zs[i].zs, dual.col(i));
            }
            PauliOp id(n);
            Tableau target = compose(hfree_to_tableau(HFreeOp(id, BitMatrix(n, n), a)),
                                     inverse(hfree_to_tableau(HFreeOp(id, a, BitMatrix::identity(n)))));
            ASSERT_EQ(compose(pauli_tableau(g.q), t), target);
            if (n <= 3) {
                Circuit corrected = g.circuit;
                for (size_t q = 0; q < n; q++) {
                    if (g.q.xs.get(q)) {
                        corrected.append(GateKind::X, (uint32_t)q);
                    }
                    if (g.q.zs.get(q)) {
                        corrected.append(GateKind::Z, (uint32_t)q);
                    }
                }
                ASSERT_TRUE(unitary_is_linear_up_to_phases(circuit_unitary(corrected), a));
            }
        }
    }
}

TEST(cnot_advantage, gstar_errors) {
    try {
        gstar_symmetric_circuit(BitMatrix::from_rows({"11", "01"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotSymmetric);
    }
    try {
        gstar_symmetric_circuit(BitMatrix::from_rows({"11", "11"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(cnot_advantage, cost_oracle_sizes_and_small_values) {
    const size_t sizes[] = {1, 6, 168, 20160};
    for (size_t n = 1; n <= 4; n++) {
        CnotCostTable t = cnot_cost_oracle(n);
        ASSERT_EQ(t.size(), sizes[n - 1]);
        ASSERT_EQ(t.cost(BitMatrix::identity(n)), 0);
        for (uint32_t c = 0; c < n; c++) {
            for (uint32_t g = 0; g < n; g++) {
                if (c != g) {
                    Circuit one(n);
                    one.append(GateKind::CNOT, c, g);
                    ASSERT_EQ(t.cost(cnot_circuit_matrix(one)), 1);
                }
            }
        }
    }
    ASSERT_EQ(cnot_cost_oracle(2).cost(BitMatrix::from_rows({"01", "10"})), 3);
    ASSERT_THROW(cnot_cost_oracle(5), Error);
    ASSERT_THROW(cnot_cost_oracle(2).cost(BitMatrix::from_rows({"11", "11"})), Error);
}

TEST(cnot_advantage, cost_oracle_example1) {
    CnotCostTable t = cnot_cost_oracle(4);
    ASSERT_EQ(t.cost(cnot_circuit_matrix(example1())), 8);
}

TEST(cnot_advantage, cost_oracle_agrees_with_random_circuits) {
    CnotCostTable t = cnot_cost_oracle(4);
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 200; trial++) {
        Circuit c = random_circuit(4, trial % 12, rng, true);
        ASSERT_LE(t.cost(cnot_circuit_matrix(c)), c.gates.size());
        ASSERT_EQ(t.unpack(CnotCostTable::pack(cnot_circuit_matrix(c))), cnot_circuit_matrix(c));
    }
}

TEST(cnot_advantage, permutation_chain_spot_check_n3) {
    CnotCostTable t = cnot_cost_oracle(3);
    std::vector<uint32_t> p = {0, 1, 2};
    std::vector<Permutation> perms;
    do {
        perms.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    size_t strictly_cheaper = 0;
    for (const auto &[key, cost] : t.costs()) {
        BitMatrix u = t.unpack(key);
        uint32_t best = cost;
        for (const auto &perm : perms) {
            best = std::min(best, t.cost(mat_mul(perm.to_matrix(), u)));
        }
        ASSERT_GE(cost, best);
        strictly_cheaper += best < cost;
    }
    RecordProperty("permutation_strictly_cheaper", (int)strictly_cheaper);
}
