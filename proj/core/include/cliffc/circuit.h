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

#ifndef CLIFFC_CIRCUIT_H
#define CLIFFC_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cliffc {

/// P is diag(1, i). PDG is its inverse, used by phase-polynomial rewrites.
enum class GateKind : uint8_t { X, Z, P, PDG, H, CNOT, CZ, SWAP };

struct Gate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;  // Target for CNOT; second qubit for CZ and SWAP.

    bool is_two_qubit() const {
        return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
    }
    bool operator==(const Gate &other) const = default;
};

std::string_view gate_name(GateKind kind);

/// A named contiguous range of gates, starting at gate index `begin`.
struct StageMark {
    std::string label;
    size_t begin;
    bool operator==(const StageMark &other) const = default;
};

/// Gates are listed in execution order: gates[0] acts first.
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;
    std::vector<StageMark> stages;

    Circuit() = default;
    explicit Circuit(size_t n) : num_qubits(n) {
    }

    void append(GateKind kind, uint32_t q0, uint32_t q1 = 0);
    void append(const Circuit &other);
    void begin_stage(std::string label);
    /// Gates [begin, end) of the stage with index `k`.
    std::pair<size_t, size_t> stage_range(size_t k) const;

    size_t two_qubit_count() const;
    size_t count(GateKind kind) const;
    /// The same circuit with gate order reversed and each gate replaced by its inverse.
    Circuit inverse() const;
    bool operator==(const Circuit &other) const = default;
};

/// Text dialect: one gate per line ("cnot 1 2", "h 3"), 1-based qubit indices,
/// '#' starts a comment. "# qubits: N" fixes the width; "# stage: LABEL" opens a stage.
/// Without a width line the width is the largest qubit index used.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &circuit);

}  // namespace cliffc

#endif
