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

#include "cliffc/canonical.h"

#include <random>
#include <set>

#include "cliffc/sampling.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cliffc;
using namespace cliffc::testing;

namespace {

std::string form_key(const CanonicalForm &cf) {
    std::string key = cf.h.str() + cf.gamma.str() + cf.delta.str() + cf.pauli_prime.str() + cf.gamma_prime.str() +
                      cf.delta_prime.str();
    for (uint32_t v : cf.perm.images()) {
        key += std::to_string(v) + ",";
    }
    return key;
}

void expect_bijective(size_t n, size_t expected_count) {
    std::vector<Tableau> all = enumerate_cliffords(n);
    ASSERT_EQ(all.size(), expected_count);
    std::set<std::string> forms;
    for (const auto &t : all) {
        CanonicalForm cf = canonical_form(t);
        ASSERT_TRUE(canonical_invariants_hold(cf));
        ASSERT_EQ(canonical_to_tableau(cf), t);
        ASSERT_EQ(from_circuit(canonical_to_circuit(cf)), t);
        forms.insert(form_key(cf));
    }
    ASSERT_EQ(forms.size(), expected_count);
}

}  // namespace

TEST(canonical, worked_example) {
    Tableau u = from_circuit(parse_circuit(read_fixture("worked_example.txt")));
    CanonicalForm cf = canonical_form(u);
    BitMatrix g = BitMatrix::from_rows({"01", "10"});
    ASSERT_EQ(cf.h.str(), "10");
    ASSERT_TRUE(cf.perm.is_identity());
    ASSERT_EQ(cf.gamma, g);
    ASSERT_EQ(cf.gamma_prime, g);
    ASSERT_EQ(cf.delta, BitMatrix::identity(2));
    ASSERT_EQ(cf.delta_prime, BitMatrix::identity(2));
    ASSERT_EQ(cf.pauli_prime.str(), "+IZ");
}

TEST(canonical, identity_is_trivial) {
    CanonicalForm cf = canonical_form(identity_tableau(4));
    ASSERT_EQ(cf.h, BitVector(4));
    ASSERT_TRUE(cf.perm.is_identity());
    ASSERT_TRUE(cf.gamma.is_zero());
    ASSERT_TRUE(cf.gamma_prime.is_zero());
    ASSERT_EQ(cf.delta, BitMatrix::identity(4));
    ASSERT_EQ(cf.delta_prime, BitMatrix::identity(4));
    ASSERT_EQ(cf.pauli_prime, PauliOp(4));
}

TEST(canonical, bijective_n1) {
    expect_bijective(1, 24);
}

TEST(canonical, bijective_n2) {
    expect_bijective(2, 11520);
}

TEST(canonical, random_forms_round_trip) {
    for (size_t n = 1; n <= 8; n++) {
        RandomSource rng(100 + n, 0);
        for (int trial = 0; trial < 40; trial++) {
            CanonicalForm cf = random_clifford(n, rng);
            ASSERT_TRUE(canonical_invariants_hold(cf));
            Tableau t = canonical_to_tableau(cf);
            ASSERT_TRUE(is_symplectic(t));
            ASSERT_EQ(canonical_form(t), cf);
        }
    }
}

TEST(canonical, random_circuits_recompose) {
    std::mt19937_64 rng(21);
    for (size_t n = 1; n <= 10; n++) {
        for (int trial = 0; trial < 10; trial++) {
            Tableau t = from_circuit(random_circuit(n, 8 * n, rng));
            CanonicalForm cf = canonical_form(t);
            ASSERT_TRUE(canonical_invariants_hold(cf));
            ASSERT_EQ(canonical_to_tableau(cf), t);
            ASSERT_EQ(from_circuit(canonical_to_circuit(cf)), t);
        }
    }
}

TEST(canonical, disentangle_pauli_reaches_single_qubit) {
    std::mt19937_64 rng(22);
    for (size_t n = 1; n <= 7; n++) {
        for (int trial = 0; trial < 20; trial++) {
            PauliOp o(n);
            while (o.is_identity_up_to_phase()) {
                for (size_t q = 0; q < n; q++) {
                    o.xs.set(q, rng() & 1);
                    o.zs.set(q, rng() & 1);
                }
            }
            PauliDisentangling d = disentangle_pauli(o);
            ASSERT_TRUE(d.b.is_borel());
            ASSERT_EQ(from_circuit(d.gates), hfree_to_tableau(d.b));
            PauliOp image = hfree_to_tableau(d.b)(o);
            ASSERT_TRUE(single_qubit_support(image).has_value());
            ASSERT_EQ(image.xs, d.result.xs);
            ASSERT_EQ(image.zs, d.result.zs);
        }
    }
}

TEST(canonical, clifford_step_disentangles_one_row) {
    std::mt19937_64 rng(23);
    for (size_t n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 10; trial++) {
            Tableau u = from_circuit(random_circuit(n, 10 * n, rng));
            std::vector<bool> done(n, false);
            CliffordStep step = disentangle_clifford_step(u, 0, done);
            ASSERT_TRUE(step.b1.is_borel());
            ASSERT_TRUE(step.b2.is_borel());
            Tableau v = compose(hfree_to_tableau(step.b1), compose(u, hfree_to_tableau(step.b2)));
            ASSERT_EQ(single_qubit_support(v.xs[0]), step.k);
            ASSERT_EQ(single_qubit_support(v.zs[0]), step.k);
        }
    }
}

TEST(canonical, nonentangling_decomposition) {
    std::mt19937_64 rng(24);
    for (size_t n = 1; n <= 5; n++) {
        for (int trial = 0; trial < 20; trial++) {
            // Random single-qubit gates on each wire, followed by a random qubit permutation.
            Circuit c(n);
            for (uint32_t q = 0; q < n; q++) {
                for (int k = 0; k < 6; k++) {
                    static constexpr GateKind kinds[] = {GateKind::H, GateKind::P, GateKind::X, GateKind::Z};
                    c.append(kinds[rng() % 4], q);
                }
            }
            for (uint32_t q = 0; q + 1 < n; q++) {
                if (rng() & 1) {
                    c.append(GateKind::SWAP, q, q + 1);
                }
            }
            Tableau u = from_circuit(c);
            NonEntanglingParts parts = decompose_nonentangling(u);
            ASSERT_TRUE(parts.f1.is_borel());
            ASSERT_TRUE(parts.f2.is_borel());
            Tableau recomposed =
                compose(hfree_to_tableau(parts.f1), compose(hs_tableau(parts.w), hfree_to_tableau(parts.f2)));
            ASSERT_EQ(recomposed, u);
        }
    }
    ASSERT_THROW(decompose_nonentangling(from_circuit(parse_circuit("cnot 1 2\n"))), Error);
}

TEST(canonical, split_borel_respects_rules) {
    std::mt19937_64 rng(25);
    for (size_t n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 20; trial++) {
            RandomSource src(rng(), 0);
            QMallowsSample s = sample_qmallows(n, src);
            CanonicalForm other = random_clifford(n, src);
            HFreeOp l = hfree_mul(other.left(), other.right());
            if (!l.is_borel()) {
                continue;
            }
            BorelSplit split = split_borel(l, s.h, s.perm);
            ASSERT_TRUE(split.k.is_borel());
            ASSERT_TRUE(split.m.is_borel());
            ASSERT_TRUE(check_rules_c1c5(s.h, s.perm, split.k.gamma, split.k.delta));
            ASSERT_TRUE(check_rules_c1c5(complement(s.h), s.perm, split.m.gamma, split.m.delta));
            ASSERT_EQ(hfree_to_tableau(hfree_mul(split.k, split.m)), hfree_to_tableau(l));
            auto moved = conjugate_by_hs(split.m, HSLayer{s.h, s.perm});
            ASSERT_TRUE(moved.has_value());
            ASSERT_TRUE(moved->is_borel());
        }
    }
}
