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

#ifndef CLIFFC_REDUCE_H
#define CLIFFC_REDUCE_H

#include <string>
#include <utility>
#include <vector>

#include "cliffc/canonical.h"

namespace cliffc {

/// Ordered named stages; each stage only holds gates of its label's kind.
struct StagedCircuit {
    size_t num_qubits = 0;
    std::vector<std::pair<std::string, Circuit>> stages;

    /// Concatenation with one "# stage:" mark per stage, empty stages included.
    Circuit flatten() const;
    std::string label_string() const;  // "-X-Z-P-...-"
};

struct MeasurementReduction {
    Circuit d;       // Stages CX, CZ, P, H in execution order.
    size_t k = 0;    // Number of Hadamards in the canonical form.
    size_t bound = 0;  // n k - k (k + 1) / 2.
    /// Hadamard qubits first, then the rest, each in increasing order. The block
    /// arguments below refer to this order; no SWAP gates are emitted for it.
    std::vector<uint32_t> relabel;
};

/// Circuit D such that D applied after u is Hadamard-free, with at most n k - k (k + 1) / 2
/// two-qubit gates.
MeasurementReduction measurement_reduction(const Tableau &u);

struct BlockDiagonalization {
    Circuit gates;  // CNOTs whose row operations zero the lower-left block.
    BitMatrix residual;
};

/// Delta with zero upper-right k x (n - k) block. Row combinations of the top k rows clear the
/// lower-left block using at most k (n - k) CNOTs; residual is the block-diagonal result.
BlockDiagonalization block_diagonalize_delta(const BitMatrix &delta, size_t k);

struct PhaseCommutation {
    BitMatrix gamma_out;
    BitVector z_before_linear;  // Z corrections acting on the inputs of the linear layer.
};

/// Phase layer Phi_gamma applied after |x> -> |delta x>, rewritten as Phi_gamma_out and Z
/// corrections applied before it: Phi_gamma D_delta = D_delta Z^z Phi_gamma_out.
PhaseCommutation commute_diag_past_linear(const BitMatrix &gamma, const BitMatrix &delta);

/// Stages -X-Z-P-CX-CZ-H-CZ-H-P- whose concatenation equals u.
StagedCircuit nine_stage_decomposition(const Tableau &u);

}  // namespace cliffc

#endif
