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

#ifndef CLIFFC_CNOT_ADVANTAGE_H
#define CLIFFC_CNOT_ADVANTAGE_H

#include <cstdint>
#include <unordered_map>

#include "cliffc/hfree.h"

namespace cliffc {

/// Matrix U of a pure-CNOT circuit W, with W|x> = |Ux>. Throws NotCnotCircuit otherwise.
BitMatrix cnot_circuit_matrix(const Circuit &c);

/// Product of H over the set bits of `mask`.
Circuit hadamard_layer(const BitVector &mask);

/// Whether U maps L(a) onto L(b), where L(a) holds the vectors supported inside a.
bool subspace_image_matches(const BitMatrix &u, const BitVector &a, const BitVector &b);

/// Whether H(b) W H(a) is Hadamard-free, for W|x> = |Ux>.
bool sandwich_is_hfree(const BitMatrix &u, const BitVector &a, const BitVector &b);

/// Whether U L(a) = L(b) and U x = U^-T x on L(a). When true, H(b) W H(a) = W.
bool sandwich_is_identity(const BitMatrix &u, const BitVector &a, const BitVector &b);

struct RewriteOptions {
    size_t max_weight = 2;  // Largest |a| = |b| tried per window.
};

struct RewriteResult {
    Circuit circuit;
    size_t input_2q = 0;
    size_t output_2q = 0;
    size_t windows_applied = 0;
};

/// Rewrites a CNOT circuit by wrapping CNOT windows in Hadamards that leave them unchanged,
/// turning a neighbouring CNOT into CZ and realizing that CZ with P, P, P-dagger on wires of
/// the window. Every accepted rewrite keeps the exact tableau and drops one or two
/// two-qubit gates. Throws NotCnotCircuit for other gates.
RewriteResult example1_rewrite(const Circuit &c, const RewriteOptions &options = {});

struct GStarCircuit {
    Circuit circuit;  // H, CZ/P layer of A^-1, H, CZ/P layer of A, H.
    PauliOp q;        // circuit followed by q equals D_A Phi_A^-1 exactly.
    size_t two_qubit_count = 0;
};

/// Circuit implementing |x> -> |Ax> up to diagonal phases, for symmetric invertible A, with
/// sum_{i<j} A_ij + (A^-1)_ij two-qubit gates. Throws NotSymmetric or Singular.
GStarCircuit gstar_symmetric_circuit(const BitMatrix &a);

/// Minimal CNOT counts over GL(n), n <= 4, found by breadth-first search from the identity.
class CnotCostTable {
   public:
    explicit CnotCostTable(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return costs_.size();
    }
    /// Throws Singular for a non-invertible matrix.
    uint32_t cost(const BitMatrix &u) const;
    const std::unordered_map<uint16_t, uint8_t> &costs() const {
        return costs_;
    }

    /// Row-major packing of an n x n matrix into n^2 bits.
    static uint16_t pack(const BitMatrix &u);
    BitMatrix unpack(uint16_t key) const;

   private:
    size_t n_;
    std::unordered_map<uint16_t, uint8_t> costs_;
};

/// Throws TooLarge for n > 4.
CnotCostTable cnot_cost_oracle(size_t n);

}  // namespace cliffc

#endif
