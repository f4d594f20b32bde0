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

#ifndef CLIFFC_PAULI_H
#define CLIFFC_PAULI_H

#include <optional>
#include <string>
#include <string_view>

#include "cliffc/bit_matrix.h"

namespace cliffc {

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... where the letter on
/// qubit q is I, X, Z or Y for (x_q, z_q) = (0,0), (1,0), (0,1), (1,1).
///
/// Y is a letter in its own right (not i*X*Z), so Hermitian operators always
/// have an even phase and the phase is exactly the coefficient printed in text.
struct PauliOp {
    BitVector xs;
    BitVector zs;
    uint8_t phase = 0;

    PauliOp() = default;
    explicit PauliOp(size_t num_qubits);
    PauliOp(BitVector xs, BitVector zs, uint8_t phase);

    static PauliOp identity(size_t num_qubits) {
        return PauliOp(num_qubits);
    }
    /// `letter` is one of 'I', 'X', 'Y', 'Z'.
    static PauliOp single(size_t num_qubits, size_t qubit, char letter);
    /// Parses "-iXZI", "+Y", "XX" and so on. Leftmost letter is qubit 0.
    static PauliOp from_str(std::string_view text);

    size_t num_qubits() const {
        return xs.size();
    }
    char letter(size_t qubit) const;
    std::string str() const;
    bool is_identity_up_to_phase() const;
    size_t weight() const;

    /// *this = *this * rhs, tracking the phase exactly.
    PauliOp &operator*=(const PauliOp &rhs);
    bool operator==(const PauliOp &other) const = default;
};

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q);
bool commutes(const PauliOp &p, const PauliOp &q);
/// The qubit p acts on when it has weight exactly one; nullopt for identity or weight >= 2.
std::optional<size_t> single_qubit_support(const PauliOp &p);

/// Exponent e with lhs * rhs = i^e * (letters of the product), ignoring both input phases.
uint8_t product_log_i(const PauliOp &lhs, const PauliOp &rhs);

}  // namespace cliffc

#endif
