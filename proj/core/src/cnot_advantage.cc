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

#include "cliffc/cnot_advantage.h"

#include <optional>

namespace cliffc {

namespace {

void require_square_invertible(const BitMatrix &u) {
    if (u.num_rows() != u.num_cols()) {
        throw Error(ErrorKind::DimensionMismatch, "linear map is not square");
    }
    if (rank(u) != u.num_rows()) {
        throw Error(ErrorKind::Singular, "linear map is not invertible");
    }
}

void require_masks(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    if (a.size() != u.num_rows() || b.size() != u.num_rows()) {
        throw Error(ErrorKind::DimensionMismatch, "support mask width differs from the matrix");
    }
}

bool image_in_span(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    if (a.popcount() != b.popcount()) {
        return false;
    }
    BitVector outside = b;
    for (size_t i = 0; i < outside.size(); i++) {
        outside.flip(i);
    }
    for (size_t j = 0; j < a.size(); j++) {
        if (a.get(j) && (u.col(j) & outside).any()) {
            return false;
        }
    }
    return true;
}

// All masks of the given weight on n bits, in lexicographic order of their supports.
std::vector<BitVector> masks_of_weight(size_t n, size_t w) {
    std::vector<BitVector> out;
    if (w > n) {
        return out;
    }
    std::vector<size_t> idx(w);
    for (size_t i = 0; i < w; i++) {
        idx[i] = i;
    }
    while (true) {
        BitVector v(n);
        for (size_t i : idx) {
            v.set(i, true);
        }
        out.push_back(std::move(v));
        size_t k = w;
        while (k > 0 && idx[k - 1] == n - w + k - 1) {
            k--;
        }
        if (k == 0) {
            return out;
        }
        idx[k - 1]++;
        for (size_t i = k; i < w; i++) {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

// A diagonal phase i^{e f(x)} where f is a linear function of the window inputs.
struct PhaseTerm {
    BitVector f;
    unsigned e;
};

void add_term(std::vector<PhaseTerm> &terms, const BitVector &f, unsigned e) {
    for (auto &t : terms) {
        if (t.f == f) {
            t.e = (t.e + e) & 3;
            return;
        }
    }
    terms.push_back({f, e & 3});
}

// CZ on wires holding f and g: i^{f + g - (f xor g)} = (-1)^{f g}.
void add_cz_terms(std::vector<PhaseTerm> &terms, const BitVector &f, const BitVector &g) {
    add_term(terms, f, 1);
    add_term(terms, g, 1);
    add_term(terms, f ^ g, 3);
}

// Earliest (boundary, wire) where each term's function is carried; nullopt if one never is.
std::optional<std::vector<std::pair<size_t, uint32_t>>> place_terms(
    const std::vector<std::vector<BitVector>> &wires, const std::vector<PhaseTerm> &terms) {
    std::vector<std::pair<size_t, uint32_t>> out;
    for (const auto &t : terms) {
        bool found = false;
        for (size_t k = 0; k < wires.size() && !found; k++) {
            for (size_t w = 0; w < wires[k].size(); w++) {
                if (wires[k][w] == t.f) {
                    out.push_back({k, (uint32_t)w});
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return out;
}

bool is_cnot(const Gate &g) {
    return g.kind == GateKind::CNOT;
}

// Rewrites gates [s, e) of c, all CNOTs, as H(a) window H(b), absorbing the CNOT just before
// and/or just after the window. Returns nullopt when neither neighbour can be absorbed.
std::optional<Circuit> absorb_neighbours(
    const Circuit &c, size_t s, size_t e, const BitVector &a, const BitVector &b) {
    size_t n = c.num_qubits;
    bool left = s > 0 && is_cnot(c.gates[s - 1]) && a.get(c.gates[s - 1].q1) && !a.get(c.gates[s - 1].q0);
    bool right = e < c.gates.size() && is_cnot(c.gates[e]) && b.get(c.gates[e].q1) && !b.get(c.gates[e].q0);
    if (!left && !right) {
        return std::nullopt;
    }

    std::vector<std::vector<BitVector>> wires;
    std::vector<BitVector> cur;
    for (size_t q = 0; q < n; q++) {
        cur.push_back(BitVector::unit(n, q));
    }
    wires.push_back(cur);
    for (size_t k = s; k < e; k++) {
        cur[c.gates[k].q1] ^= cur[c.gates[k].q0];
        wires.push_back(cur);
    }

    std::vector<PhaseTerm> left_terms;
    std::vector<PhaseTerm> right_terms;
    if (left) {
        const Gate &g = c.gates[s - 1];
        add_cz_terms(left_terms, wires.front()[g.q0], wires.front()[g.q1]);
        left = place_terms(wires, left_terms).has_value();
    }
    if (right) {
        const Gate &g = c.gates[e];
        add_cz_terms(right_terms, wires.back()[g.q0], wires.back()[g.q1]);
        right = place_terms(wires, right_terms).has_value();
    }
    if (!left && !right) {
        return std::nullopt;
    }
    std::vector<PhaseTerm> terms;
    if (left) {
        terms = left_terms;
    }
    if (right) {
        for (const auto &t : right_terms) {
            add_term(terms, t.f, t.e);
        }
    }
    std::erase_if(terms, [](const PhaseTerm &t) { return t.e == 0; });
    auto places = *place_terms(wires, terms);

    Circuit out(n);
    for (size_t k = 0; k < (left ? s - 1 : s); k++) {
        out.gates.push_back(c.gates[k]);
    }
    out.append(hadamard_layer(a));
    for (size_t k = 0; k <= e - s; k++) {
        for (size_t t = 0; t < terms.size(); t++) {
            if (places[t].first != k) {
                continue;
            }
            static constexpr GateKind kinds[] = {GateKind::P, GateKind::Z, GateKind::PDG};
            out.append(kinds[terms[t].e - 1], places[t].second);
        }
        if (s + k < e) {
            out.gates.push_back(c.gates[s + k]);
        }
    }
    out.append(hadamard_layer(b));
    for (size_t k = right ? e + 1 : e; k < c.gates.size(); k++) {
        out.gates.push_back(c.gates[k]);
    }
    return out;
}

std::optional<Circuit> rewrite_once(const Circuit &c, const Tableau &target, const RewriteOptions &options) {
    size_t m = c.gates.size();
    size_t n = c.num_qubits;
    // run_end[s]: one past the last gate of the CNOT run starting at s.
    std::vector<size_t> run_end(m + 1, m);
    for (size_t k = m; k-- > 0;) {
        run_end[k] = is_cnot(c.gates[k]) ? run_end[k + 1] : k;
    }
    for (size_t len = m; len >= 1; len--) {
        for (size_t s = 0; s + len <= m; s++) {
            size_t e = s + len;
            if (run_end[s] < e) {
                continue;
            }
            bool left_cnot = s > 0 && is_cnot(c.gates[s - 1]);
            bool right_cnot = e < m && is_cnot(c.gates[e]);
            if (!left_cnot && !right_cnot) {
                continue;
            }
            Circuit window(n);
            window.gates.assign(c.gates.begin() + (ptrdiff_t)s, c.gates.begin() + (ptrdiff_t)e);
            BitMatrix u = cnot_circuit_matrix(window);
            for (size_t w = 1; w <= options.max_weight && w <= n; w++) {
                auto masks = masks_of_weight(n, w);
                for (const auto &a : masks) {
                    for (const auto &b : masks) {
                        if (!sandwich_is_identity(u, a, b)) {
                            continue;
                        }
                        auto candidate = absorb_neighbours(c, s, e, a, b);
                        if (candidate.has_value() && candidate->two_qubit_count() < c.two_qubit_count() &&
                            from_circuit(*candidate) == target) {
                            return candidate;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

void append_phase_layer(Circuit &c, const BitMatrix &gamma) {
    size_t n = gamma.num_rows();
    for (size_t i = 0; i < n; i++) {
        if (gamma.get(i, i)) {
            c.append(GateKind::P, (uint32_t)i);
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (gamma.get(i, j)) {
                c.append(GateKind::CZ, (uint32_t)i, (uint32_t)j);
            }
        }
    }
}

}  // namespace

BitMatrix cnot_circuit_matrix(const Circuit &c) {
    BitMatrix u = BitMatrix::identity(c.num_qubits);
    for (const auto &g : c.gates) {
        if (!is_cnot(g)) {
            throw Error(ErrorKind::NotCnotCircuit, "gate " + std::string(gate_name(g.kind)) + " is not a CNOT");
        }
        u.xor_row(g.q1, g.q0);
    }
    return u;
}

Circuit hadamard_layer(const BitVector &mask) {
    Circuit c(mask.size());
    for (size_t q = 0; q < mask.size(); q++) {
        if (mask.get(q)) {
            c.append(GateKind::H, (uint32_t)q);
        }
    }
    return c;
}

bool subspace_image_matches(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    require_square_invertible(u);
    require_masks(u, a, b);
    return image_in_span(u, a, b);
}

bool sandwich_is_hfree(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    return subspace_image_matches(u, a, b);
}

bool sandwich_is_identity(const BitMatrix &u, const BitVector &a, const BitVector &b) {
    if (!subspace_image_matches(u, a, b)) {
        return false;
    }
    BitMatrix dual = transpose(mat_inv(u));
    for (size_t j = 0; j < a.size(); j++) {
        if (a.get(j) && !(u.col(j) == dual.col(j))) {
            return false;
        }
    }
    return true;
}

RewriteResult example1_rewrite(const Circuit &c, const RewriteOptions &options) {
    cnot_circuit_matrix(c);
    RewriteResult out;
    out.circuit = Circuit(c.num_qubits);
    out.circuit.gates = c.gates;
    out.input_2q = c.two_qubit_count();
    Tableau target = from_circuit(c);
    while (auto next = rewrite_once(out.circuit, target, options)) {
        out.circuit = std::move(*next);
        out.windows_applied++;
    }
    out.output_2q = out.circuit.two_qubit_count();
    return out;
}

GStarCircuit gstar_symmetric_circuit(const BitMatrix &a) {
    if (a.num_rows() != a.num_cols() || !is_symmetric(a)) {
        throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
    }
    auto a_inv = try_mat_inv(a);
    if (!a_inv.has_value()) {
        throw Error(ErrorKind::Singular, "matrix is not invertible");
    }
    size_t n = a.num_rows();
    BitVector all(n);
    for (size_t q = 0; q < n; q++) {
        all.set(q, true);
    }
    GStarCircuit out;
    out.circuit = Circuit(n);
    out.circuit.append(hadamard_layer(all));
    append_phase_layer(out.circuit, *a_inv);
    out.circuit.append(hadamard_layer(all));
    append_phase_layer(out.circuit, a);
    out.circuit.append(hadamard_layer(all));
    out.two_qubit_count = out.circuit.two_qubit_count();

    PauliOp id = PauliOp::identity(n);
    Tableau w = hfree_to_tableau(HFreeOp(id, BitMatrix(n, n), a));
    Tableau d_plus = hfree_to_tableau(HFreeOp(id, a, BitMatrix::identity(n)));
    out.q = left_pauli_difference(compose(w, inverse(d_plus)), from_circuit(out.circuit));
    return out;
}

CnotCostTable::CnotCostTable(size_t n) : n_(n) {
    if (n == 0) {
        throw Error(ErrorKind::OutOfRange, "cost table needs at least one qubit");
    }
    if (n > 4) {
        throw Error(ErrorKind::TooLarge, "breadth-first search is limited to n <= 4");
    }
    uint16_t row_mask = (uint16_t)((1u << n) - 1);
    uint16_t start = pack(BitMatrix::identity(n));
    std::vector<uint16_t> frontier{start};
    costs_[start] = 0;
    for (uint8_t depth = 1; !frontier.empty(); depth++) {
        std::vector<uint16_t> next;
        for (uint16_t key : frontier) {
            for (size_t ctl = 0; ctl < n; ctl++) {
                uint16_t row = (uint16_t)((key >> (ctl * n)) & row_mask);
                for (size_t tgt = 0; tgt < n; tgt++) {
                    if (tgt == ctl) {
                        continue;
                    }
                    uint16_t k2 = (uint16_t)(key ^ (row << (tgt * n)));
                    if (costs_.emplace(k2, depth).second) {
                        next.push_back(k2);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
}

uint16_t CnotCostTable::pack(const BitMatrix &u) {
    size_t n = u.num_rows();
    if (n != u.num_cols() || n > 4) {
        throw Error(ErrorKind::DimensionMismatch, "packing needs a square matrix with n <= 4");
    }
    uint16_t key = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (u.get(i, j)) {
                key |= (uint16_t)(1u << (i * n + j));
            }
        }
    }
    return key;
}

BitMatrix CnotCostTable::unpack(uint16_t key) const {
    BitMatrix u(n_, n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            u.set(i, j, (key >> (i * n_ + j)) & 1);
        }
    }
    return u;
}

uint32_t CnotCostTable::cost(const BitMatrix &u) const {
    if (u.num_rows() != n_ || u.num_cols() != n_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix size differs from the table");
    }
    auto it = costs_.find(pack(u));
    if (it == costs_.end()) {
        throw Error(ErrorKind::Singular, "linear map is not invertible");
    }
    return it->second;
}

CnotCostTable cnot_cost_oracle(size_t n) {
    return CnotCostTable(n);
}

}  // namespace cliffc
