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

#include "cliffc/reduce.h"

namespace cliffc {

Circuit StagedCircuit::flatten() const {
    Circuit out(num_qubits);
    for (const auto &[label, c] : stages) {
        out.begin_stage(label);
        for (const auto &g : c.gates) {
            out.gates.push_back(g);
        }
    }
    return out;
}

std::string StagedCircuit::label_string() const {
    std::string out = "-";
    for (const auto &stage : stages) {
        out += stage.first + "-";
    }
    return out;
}

namespace {

BitMatrix submatrix(const BitMatrix &m, const std::vector<uint32_t> &rows, const std::vector<uint32_t> &cols) {
    BitMatrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = 0; j < cols.size(); j++) {
            out.set(i, j, m.get(rows[i], cols[j]));
        }
    }
    return out;
}

// Left Borel factor F(I, gamma, delta) of a canonical form, split along the Hadamard qubits
// T and the rest B: rows of D_delta over B are cleared by c_prime times the T rows, and the
// T x T phase block left over after that linear change is gamma_tt.
struct ReductionPieces {
    std::vector<uint32_t> t;
    std::vector<uint32_t> b;
    BitMatrix c_prime;   // |B| x |T|.
    BitMatrix gamma_tt;  // |T| x |T|.
};

ReductionPieces reduction_pieces(const CanonicalForm &cf) {
    ReductionPieces p;
    for (size_t q = 0; q < cf.num_qubits(); q++) {
        (cf.h.get(q) ? p.t : p.b).push_back((uint32_t)q);
    }
    BitMatrix a_inv = mat_inv(submatrix(cf.delta, p.t, p.t));
    p.c_prime = mat_mul(submatrix(cf.delta, p.b, p.t), a_inv);
    p.gamma_tt = mat_mul(transpose(a_inv), mat_mul(submatrix(cf.gamma, p.t, p.t), a_inv));
    return p;
}

Circuit cnot_stage(size_t n, const ReductionPieces &p) {
    Circuit c(n);
    for (size_t i = 0; i < p.b.size(); i++) {
        for (size_t j = 0; j < p.t.size(); j++) {
            if (p.c_prime.get(i, j)) {
                c.append(GateKind::CNOT, p.t[j], p.b[i]);
            }
        }
    }
    return c;
}

void append_cz_block(Circuit &c, const BitMatrix &gamma, const std::vector<uint32_t> &qubits) {
    for (size_t i = 0; i < qubits.size(); i++) {
        for (size_t j = i + 1; j < qubits.size(); j++) {
            if (gamma.get(i, j)) {
                c.append(GateKind::CZ, qubits[i], qubits[j]);
            }
        }
    }
}

Circuit phase_stage(size_t n, const BitMatrix &gamma, const std::vector<uint32_t> &qubits) {
    Circuit c(n);
    for (size_t i = 0; i < qubits.size(); i++) {
        if (gamma.get(i, i)) {
            c.append(GateKind::P, qubits[i]);
        }
    }
    return c;
}

Circuit hadamard_stage(size_t n, const std::vector<bool> &mask) {
    Circuit c(n);
    for (size_t q = 0; q < n; q++) {
        if (mask[q]) {
            c.append(GateKind::H, (uint32_t)q);
        }
    }
    return c;
}

Circuit reduction_circuit(size_t n, const ReductionPieces &p) {
    Circuit d(n);
    d.begin_stage("CX");
    d.append(cnot_stage(n, p));
    d.begin_stage("CZ");
    append_cz_block(d, p.gamma_tt, p.t);
    d.begin_stage("P");
    d.append(phase_stage(n, p.gamma_tt, p.t));
    d.begin_stage("H");
    for (uint32_t q : p.t) {
        d.append(GateKind::H, q);
    }
    return d;
}

std::vector<uint32_t> all_qubits(size_t n) {
    std::vector<uint32_t> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = (uint32_t)i;
    }
    return out;
}

}  // namespace

MeasurementReduction measurement_reduction(const Tableau &u) {
    size_t n = u.num_qubits();
    CanonicalForm cf = canonical_form(u);
    ReductionPieces p = reduction_pieces(cf);
    MeasurementReduction out;
    out.k = p.t.size();
    out.bound = n * out.k - out.k * (out.k + 1) / 2;
    out.d = reduction_circuit(n, p);
    out.relabel = p.t;
    out.relabel.insert(out.relabel.end(), p.b.begin(), p.b.end());
    return out;
}

BlockDiagonalization block_diagonalize_delta(const BitMatrix &delta, size_t k) {
    size_t n = delta.num_rows();
    if (delta.num_cols() != n || k > n) {
        throw Error(ErrorKind::DimensionMismatch, "block split does not fit the matrix");
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = k; j < n; j++) {
            if (delta.get(i, j)) {
                throw Error(ErrorKind::BadBlockPattern, "upper-right block is not zero");
            }
        }
    }
    ReductionPieces p;
    p.t = all_qubits(k);
    for (size_t q = k; q < n; q++) {
        p.b.push_back((uint32_t)q);
    }
    p.c_prime = mat_mul(submatrix(delta, p.b, p.t), mat_inv(submatrix(delta, p.t, p.t)));
    BlockDiagonalization out{cnot_stage(n, p), delta};
    for (const auto &g : out.gates.gates) {
        out.residual.xor_row(g.q1, g.q0);
    }
    return out;
}

PhaseCommutation commute_diag_past_linear(const BitMatrix &gamma, const BitMatrix &delta) {
    size_t n = delta.num_rows();
    if (delta.num_cols() != n || gamma.num_rows() != n || gamma.num_cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "phase layer and linear layer sizes differ");
    }
    PhaseCommutation out{mat_mul(transpose(delta), mat_mul(gamma, delta)), BitVector(n)};
    for (size_t a = 0; a < n; a++) {
        // The phase exponent of input e_a, mod 4: sum_i G_ii y_i + 2 sum_{i<j} G_ij y_i y_j.
        BitVector y = delta.col(a);
        unsigned c = 0;
        for (size_t i = 0; i < n; i++) {
            if (!y.get(i)) {
                continue;
            }
            c += gamma.get(i, i);
            for (size_t j = i + 1; j < n; j++) {
                if (y.get(j) && gamma.get(i, j)) {
                    c += 2;
                }
            }
        }
        out.gamma_out.set(a, a, c & 1);
        out.z_before_linear.set(a, (c >> 1) & 1);
    }
    return out;
}

StagedCircuit nine_stage_decomposition(const Tableau &u) {
    size_t n = u.num_qubits();
    CanonicalForm cf = canonical_form(u);
    ReductionPieces p = reduction_pieces(cf);
    // u = D^-1 R with R = D u Hadamard-free.
    Tableau r_tab = compose(from_circuit(reduction_circuit(n, p)), u);
    auto r = try_tableau_to_hfree(r_tab);
    if (!r.has_value()) {
        throw Error(ErrorKind::Internal, "reduced operator is not Hadamard-free");
    }
    std::vector<uint32_t> qubits = all_qubits(n);

    StagedCircuit out;
    out.num_qubits = n;
    out.stages.push_back({"X", Circuit(n)});
    out.stages.push_back({"Z", Circuit(n)});
    out.stages.push_back({"P", phase_stage(n, r->gamma, qubits)});
    out.stages.push_back({"CX", linear_circuit(r->delta)});
    BitMatrix gamma_off = r->gamma;
    for (size_t i = 0; i < n; i++) {
        gamma_off.set(i, i, false);
    }
    // CZ layer moved from before the linear layer to after it.
    BitMatrix cz1 = commute_diag_past_linear(gamma_off, mat_inv(r->delta)).gamma_out;
    Circuit cz1_stage(n);
    append_cz_block(cz1_stage, cz1, qubits);
    out.stages.push_back({"CZ", std::move(cz1_stage)});

    // D^-1 = H_T, then the T x T phase block, then CNOT(t, b) written as H_b CZ(t, b) H_b.
    std::vector<bool> targets(n, false);
    for (const auto &g : cnot_stage(n, p).gates) {
        targets[g.q1] = true;
    }
    std::vector<bool> first_h = targets;
    for (uint32_t q : p.t) {
        first_h[q] = true;
    }
    out.stages.push_back({"H", hadamard_stage(n, first_h)});
    Circuit cz2(n);
    append_cz_block(cz2, p.gamma_tt, p.t);
    for (const auto &g : cnot_stage(n, p).gates) {
        cz2.append(GateKind::CZ, g.q0, g.q1);
    }
    out.stages.push_back({"CZ", std::move(cz2)});
    out.stages.push_back({"H", hadamard_stage(n, targets)});
    out.stages.push_back({"P", phase_stage(n, p.gamma_tt, p.t)});

    // Remaining sign discrepancies are a Pauli acting first.
    PauliOp q = right_pauli_difference(u, from_circuit(out.flatten()));
    for (size_t i = 0; i < n; i++) {
        if (q.xs.get(i)) {
            out.stages[0].second.append(GateKind::X, (uint32_t)i);
        }
        if (q.zs.get(i)) {
            out.stages[1].second.append(GateKind::Z, (uint32_t)i);
        }
    }
    return out;
}

}  // namespace cliffc
