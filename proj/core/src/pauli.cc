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

#include "cliffc/pauli.h"

#include <bit>

namespace cliffc {

PauliOp::PauliOp(size_t num_qubits) : xs(num_qubits), zs(num_qubits), phase(0) {
}

PauliOp::PauliOp(BitVector xs_, BitVector zs_, uint8_t phase_) : xs(std::move(xs_)), zs(std::move(zs_)), phase(phase_ & 3) {
    if (xs.size() != zs.size()) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli x and z parts differ in length");
    }
}

PauliOp PauliOp::single(size_t num_qubits, size_t qubit, char letter) {
    if (qubit >= num_qubits) {
        throw Error(ErrorKind::OutOfRange, "Pauli qubit index out of range");
    }
    PauliOp p(num_qubits);
    switch (letter) {
        case 'I':
            break;
        case 'X':
            p.xs.set(qubit, true);
            break;
        case 'Z':
            p.zs.set(qubit, true);
            break;
        case 'Y':
            p.xs.set(qubit, true);
            p.zs.set(qubit, true);
            break;
        default:
            throw Error(ErrorKind::Parse, std::string("not a Pauli letter: ") + letter);
    }
    return p;
}

PauliOp PauliOp::from_str(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliOp p(text.size());
    p.phase = phase;
    for (size_t q = 0; q < text.size(); q++) {
        char c = text[q];
        if (c == 'X' || c == 'Y') {
            p.xs.set(q, true);
        }
        if (c == 'Z' || c == 'Y') {
            p.zs.set(q, true);
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw Error(ErrorKind::Parse, std::string("not a Pauli letter: ") + c);
        }
    }
    return p;
}

char PauliOp::letter(size_t qubit) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[xs.get(qubit) + 2 * zs.get(qubit)];
}

std::string PauliOp::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase & 3];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += letter(q);
    }
    return out;
}

bool PauliOp::is_identity_up_to_phase() const {
    return !xs.any() && !zs.any();
}

size_t PauliOp::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs.num_words(); w++) {
        total += std::popcount(xs.words()[w] | zs.words()[w]);
    }
    return total;
}

uint8_t product_log_i(const PauliOp &lhs, const PauliOp &rhs) {
    if (lhs.num_qubits() != rhs.num_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli product of different sizes");
    }
    // Two-bit counters per qubit position, accumulated across words.
    uint64_t pc1 = 0;
    uint64_t pc2 = 0;
    for (size_t w = 0; w < lhs.xs.num_words(); w++) {
        uint64_t x1 = lhs.xs.words()[w];
        uint64_t z1 = lhs.zs.words()[w];
        uint64_t x2 = rhs.xs.words()[w];
        uint64_t z2 = rhs.zs.words()[w];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        // Anti-commuting positions contribute +i or -i; these bits mark the -i ones.
        uint64_t minus = (nx ^ nz ^ x1z2) & anti;
        pc1 += std::popcount(anti);
        pc2 += std::popcount(minus);
    }
    return (uint8_t)((pc1 + 2 * pc2) & 3);
}

PauliOp &PauliOp::operator*=(const PauliOp &rhs) {
    uint8_t log_i = product_log_i(*this, rhs);
    phase = (uint8_t)((phase + rhs.phase + log_i) & 3);
    xs ^= rhs.xs;
    zs ^= rhs.zs;
    return *this;
}

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q) {
    PauliOp r = p;
    r *= q;
    return r;
}

bool commutes(const PauliOp &p, const PauliOp &q) {
    return p.xs.dot(q.zs) == p.zs.dot(q.xs);
}

std::optional<size_t> single_qubit_support(const PauliOp &p) {
    if (p.weight() != 1) {
        return std::nullopt;
    }
    auto fx = p.xs.first_one();
    auto fz = p.zs.first_one();
    return fx.has_value() ? fx : fz;
}

}  // namespace cliffc
