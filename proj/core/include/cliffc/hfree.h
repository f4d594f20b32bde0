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

#ifndef CLIFFC_HFREE_H
#define CLIFFC_HFREE_H

#include <optional>

#include "cliffc/tableau.h"

namespace cliffc {

/// A Hadamard-free Clifford operator F(O, Gamma, Delta) acting as
///
///     F|x> = i^{x^T Gamma x} O |Delta x>
///
/// i.e. F = O * D_Delta * Phi_Gamma, where Phi_Gamma applies P^{Gamma_ii} and
/// CZ^{Gamma_ij} reading the circuit *inputs*, D_Delta is the linear map
/// |x> -> |Delta x>, and O is applied last. Gamma is binary; P^2 = Z is kept in O.
struct HFreeOp {
    PauliOp pauli;
    BitMatrix gamma;
    BitMatrix delta;

    HFreeOp() = default;
    HFreeOp(PauliOp pauli, BitMatrix gamma, BitMatrix delta);
    static HFreeOp identity(size_t num_qubits);

    size_t num_qubits() const {
        return delta.num_rows();
    }
    bool is_borel() const {
        return is_lower_unit_triangular(delta);
    }
    bool operator==(const HFreeOp &other) const = default;
};

/// W = (prod_i H_i^{h_i}) * S, where the permutation layer satisfies S^-1 X_i S = X_{S(i)}.
struct HSLayer {
    BitVector h;
    Permutation perm;
};

/// Tableau of F2 * F1, with Delta = Delta2 Delta1 and Gamma = Gamma1 + Delta1^T Gamma2 Delta1.
HFreeOp hfree_mul(const HFreeOp &f2, const HFreeOp &f1);
HFreeOp hfree_inverse(const HFreeOp &f);

Tableau hfree_to_tableau(const HFreeOp &f);
/// Throws NotHFree when some Z image has an X component.
HFreeOp tableau_to_hfree(const Tableau &t);
std::optional<HFreeOp> try_tableau_to_hfree(const Tableau &t);

/// Execution order: P layer, CZ layer, CNOT layer (control index decreasing in time), Pauli layer.
Circuit borel_to_circuit(const HFreeOp &f);
/// Same layout for any invertible Delta; the linear layer comes from `linear_circuit`.
Circuit hfree_to_circuit(const HFreeOp &f);
/// CNOT circuit implementing |x> -> |Delta x>, by Gaussian elimination.
Circuit linear_circuit(const BitMatrix &delta);
/// Tableau of |x> -> |Delta x>.
Tableau linear_tableau(const BitMatrix &delta);

Tableau hs_tableau(const HSLayer &w);
Circuit hs_circuit(const HSLayer &w);

/// Rule predicates on (Gamma, Delta) for the class indexed by (h, S). The B-rules are
/// the same predicates evaluated at the complement of h.
bool rule_allows_gamma(const BitVector &h, const Permutation &perm, size_t i, size_t j);
bool rule_allows_delta(const BitVector &h, const Permutation &perm, size_t i, size_t j);
bool check_rules_c1c5(const BitVector &h, const Permutation &perm, const BitMatrix &gamma, const BitMatrix &delta);

/// W^-1 f W when it is Hadamard-free.
std::optional<HFreeOp> conjugate_by_hs(const HFreeOp &f, const HSLayer &w);

/// n(n-1)/2 + |h| + sum over i<j with S(i)<S(j) of (-1)^{1+h_i}.
int64_t qmallows_weight(const BitVector &h, const Permutation &perm);

BitVector complement(const BitVector &h);

}  // namespace cliffc

#endif
