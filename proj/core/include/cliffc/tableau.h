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

#ifndef CLIFFC_TABLEAU_H
#define CLIFFC_TABLEAU_H

#include <string>
#include <vector>

#include "cliffc/circuit.h"
#include "cliffc/pauli.h"

namespace cliffc {

/// A Clifford operator U (up to global phase), stored as xs[i] = U X_i U^-1 and zs[i] = U Z_i U^-1.
struct Tableau {
    std::vector<PauliOp> xs;
    std::vector<PauliOp> zs;

    Tableau() = default;
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return xs.size();
    }
    bool operator==(const Tableau &other) const = default;

    /// U P U^-1 for an arbitrary Pauli P.
    PauliOp operator()(const PauliOp &p) const;
    /// Image rows as strings, for debugging and hashing.
    std::string str() const;
    /// Dense binary encoding (bits and signs) usable as a hash key.
    std::string key() const;
};

enum class Side { Left, Right };

Tableau identity_tableau(size_t num_qubits);

/// g P g^-1 in place.
void conjugate_pauli(PauliOp &p, const Gate &g);

/// Side::Left gives the tableau of g*U (g after U); Side::Right gives U*g (g before U).
void apply_gate_inplace(Tableau &t, const Gate &g, Side side);
Tableau apply_gate(const Tableau &t, const Gate &g, Side side);

/// Tableau of the circuit, gates executed in order.
Tableau from_circuit(const Circuit &c);

/// Tableau of the operator a*b: b acts first, then a.
Tableau compose(const Tableau &a, const Tableau &b);
Tableau inverse(const Tableau &t);
/// Exact comparison of all 2n images including signs. Tableaux never carry a global phase.
bool equal_up_to_global_phase(const Tableau &a, const Tableau &b);

/// Checks Hermitian images and the canonical commutation relations.
bool is_symplectic(const Tableau &t);

/// Pauli Q with t == base * Q, given that t and base agree up to the signs of images.
/// Q acts before base. Throws InvalidTableau if the bit parts differ.
PauliOp right_pauli_difference(const Tableau &t, const Tableau &base);
/// Pauli O with t == O * base (O acts after base), up to global phase.
PauliOp left_pauli_difference(const Tableau &t, const Tableau &base);

/// Tableau of conjugation by a Pauli operator (phases of p are irrelevant).
Tableau pauli_tableau(const PauliOp &p);

}  // namespace cliffc

#endif
