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

#ifndef CLIFFC_CANONICAL_H
#define CLIFFC_CANONICAL_H

#include <vector>

#include "cliffc/hfree.h"

namespace cliffc {

/// U = F(I, gamma, delta) * W * F(pauli_prime, gamma_prime, delta_prime) with W = H^h S.
/// (gamma, delta) obey rules C1-C5 for (h, S); both deltas are lower unit triangular.
struct CanonicalForm {
    BitMatrix gamma;
    BitMatrix delta;
    BitVector h;
    Permutation perm;
    PauliOp pauli_prime;
    BitMatrix gamma_prime;
    BitMatrix delta_prime;

    size_t num_qubits() const {
        return h.size();
    }
    HFreeOp left() const;
    HFreeOp right() const;
    HSLayer layer() const;
    bool operator==(const CanonicalForm &other) const = default;
};

struct PauliDisentangling {
    HFreeOp b;
    PauliOp result;
    Circuit gates;
};

/// Borel b with b o b^-1 a single-qubit Pauli, using CNOT (control < target) and CZ gates.
PauliDisentangling disentangle_pauli(const PauliOp &o);

struct CliffordStep {
    size_t k;
    HFreeOp b1;
    HFreeOp b2;
    Circuit left_gates;   // Execution order; b1 is their product.
    Circuit right_gates;  // In the order they were multiplied on the right of u.
};

/// Borel b1, b2 such that b1 u b2 is (row, k)-non-entangling with k not in `done`.
/// Rows before `row` must already be disentangled onto the qubits in `done`.
CliffordStep disentangle_clifford_step(const Tableau &u, size_t row, const std::vector<bool> &done);

struct NonEntanglingParts {
    HFreeOp f1;
    HSLayer w;
    HFreeOp f2;
};

/// u = f1 * W * f2 for a non-entangling u, with f1 and f2 tensor products of single-qubit gates.
NonEntanglingParts decompose_nonentangling(const Tableau &u);

struct BorelSplit {
    HFreeOp k;
    HFreeOp m;
};

/// l = k * m with k obeying C1-C5 for (h, S) (trivial Pauli) and m obeying them for the complement of h.
BorelSplit split_borel(const HFreeOp &l, const BitVector &h, const Permutation &perm);

CanonicalForm canonical_form(const Tableau &u);
Tableau canonical_to_tableau(const CanonicalForm &cf);
/// Circuit layers in execution order: right Borel factor, S, H, left Borel factor.
Circuit canonical_to_circuit(const CanonicalForm &cf);
/// Checks rules C1-C5, triangularity, symmetry and shapes.
bool canonical_invariants_hold(const CanonicalForm &cf);

}  // namespace cliffc

#endif
