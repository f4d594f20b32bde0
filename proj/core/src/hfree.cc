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

#include "cliffc/hfree.h"

namespace cliffc {

HFreeOp::HFreeOp(PauliOp pauli_, BitMatrix gamma_, BitMatrix delta_)
    : pauli(std::move(pauli_)), gamma(std::move(gamma_)), delta(std::move(delta_)) {
    size_t n = delta.num_rows();
    if (delta.num_cols() != n || gamma.num_rows() != n || gamma.num_cols() != n || pauli.num_qubits() != n) {
        throw Error(ErrorKind::DimensionMismatch, "HFreeOp parts have inconsistent sizes");
    }
    if (!is_symmetric(gamma)) {
        throw Error(ErrorKind::NotSymmetric, "Gamma must be symmetric");
    }
}

HFreeOp HFreeOp::identity(size_t num_qubits) {
    return HFreeOp(PauliOp(num_qubits), BitMatrix(num_qubits, num_qubits), BitMatrix::identity(num_qubits));
}

namespace {

Tableau tableau_without_pauli(const BitMatrix &gamma, const BitMatrix &delta) {
    size_t n = delta.num_rows();
    BitMatrix delta_inv = mat_inv(delta);
    BitMatrix delta_t = transpose(delta);
    // Columns of Delta^-T Gamma are the rows of Gamma Delta^-1.
    BitMatrix z_of_x = mat_mul(gamma, delta_inv);
    Tableau t(n);
    for (size_t i = 0; i < n; i++) {
        PauliOp &x = t.xs[i];
        x.xs = delta_t.row(i);
        x.zs = z_of_x.row(i);
        // Phi X_i Phi^-1 carries i^{Gamma_ii} in X.Z-ordered form; D preserves that form.
        size_t ys = (x.xs & x.zs).popcount();
        x.phase = (uint8_t)((gamma.get(i, i) + 4 - (ys & 3)) & 3);
        t.zs[i].zs = delta_inv.row(i);
    }
    return t;
}

void apply_pauli_signs(Tableau &t, const PauliOp &o) {
    for (auto *images : {&t.xs, &t.zs}) {
        for (auto &p : *images) {
            if (!commutes(p, o)) {
                p.phase ^= 2;
            }
        }
    }
}

void require_same_size(const HFreeOp &a, const HFreeOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "H-free operators of different sizes");
    }
}

}  // namespace

Tableau hfree_to_tableau(const HFreeOp &f) {
    Tableau t = tableau_without_pauli(f.gamma, f.delta);
    apply_pauli_signs(t, f.pauli);
    return t;
}

std::optional<HFreeOp> try_tableau_to_hfree(const Tableau &t) {
    size_t n = t.num_qubits();
    for (const auto &z : t.zs) {
        if (z.xs.any()) {
            return std::nullopt;
        }
    }
    BitMatrix delta_t(n, n);
    BitMatrix z_of_x(n, n);
    BitMatrix z_of_z(n, n);
    for (size_t i = 0; i < n; i++) {
        delta_t.set_row(i, t.xs[i].xs);
        z_of_x.set_row(i, t.xs[i].zs);
        z_of_z.set_row(i, t.zs[i].zs);
    }
    BitMatrix delta = transpose(delta_t);
    auto delta_inv = try_mat_inv(delta);
    if (!delta_inv.has_value() || *delta_inv != z_of_z) {
        throw Error(ErrorKind::InvalidTableau, "Z images are inconsistent with the X images");
    }
    BitMatrix gamma = mat_mul(z_of_x, delta);
    if (!is_symmetric(gamma)) {
        throw Error(ErrorKind::InvalidTableau, "tableau is not symplectic");
    }
    Tableau base = tableau_without_pauli(gamma, delta);
    PauliOp o = left_pauli_difference(t, base);
    return HFreeOp(std::move(o), std::move(gamma), std::move(delta));
}

HFreeOp tableau_to_hfree(const Tableau &t) {
    auto f = try_tableau_to_hfree(t);
    if (!f.has_value()) {
        throw Error(ErrorKind::NotHFree, "tableau maps some Z to an operator with X content");
    }
    return std::move(*f);
}

HFreeOp hfree_mul(const HFreeOp &f2, const HFreeOp &f1) {
    require_same_size(f2, f1);
    BitMatrix delta = mat_mul(f2.delta, f1.delta);
    BitMatrix gamma = f1.gamma ^ mat_mul(transpose(f1.delta), mat_mul(f2.gamma, f1.delta));
    Tableau target = compose(hfree_to_tableau(f2), hfree_to_tableau(f1));
    PauliOp o = left_pauli_difference(target, tableau_without_pauli(gamma, delta));
    return HFreeOp(std::move(o), std::move(gamma), std::move(delta));
}

HFreeOp hfree_inverse(const HFreeOp &f) {
    BitMatrix delta_inv = mat_inv(f.delta);
    BitMatrix gamma = mat_mul(transpose(delta_inv), mat_mul(f.gamma, delta_inv));
    Tableau target = inverse(hfree_to_tableau(f));
    PauliOp o = left_pauli_difference(target, tableau_without_pauli(gamma, delta_inv));
    return HFreeOp(std::move(o), std::move(gamma), std::move(delta_inv));
}

namespace {

void append_phase_layers(Circuit &c, const BitMatrix &gamma) {
    size_t n = gamma.num_rows();
    c.begin_stage("P");
    for (size_t i = 0; i < n; i++) {
        if (gamma.get(i, i)) {
            c.append(GateKind::P, (uint32_t)i);
        }
    }
    c.begin_stage("CZ");
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (gamma.get(i, j)) {
                c.append(GateKind::CZ, (uint32_t)i, (uint32_t)j);
            }
        }
    }
}

void append_pauli_layers(Circuit &c, const PauliOp &o) {
    size_t n = o.num_qubits();
    c.begin_stage("X");
    for (size_t i = 0; i < n; i++) {
        if (o.xs.get(i)) {
            c.append(GateKind::X, (uint32_t)i);
        }
    }
    c.begin_stage("Z");
    for (size_t i = 0; i < n; i++) {
        if (o.zs.get(i)) {
            c.append(GateKind::Z, (uint32_t)i);
        }
    }
}

}  // namespace

Circuit borel_to_circuit(const HFreeOp &f) {
    if (!f.is_borel()) {
        throw Error(ErrorKind::NotBorel, "Delta is not lower unit triangular");
    }
    size_t n = f.num_qubits();
    Circuit c(n);
    append_phase_layers(c, f.gamma);
    c.begin_stage("CX");
    // A control must fire before anything targets it, so controls run from high to low.
    for (size_t ctrl = n; ctrl-- > 0;) {
        for (size_t tgt = ctrl + 1; tgt < n; tgt++) {
            if (f.delta.get(tgt, ctrl)) {
                c.append(GateKind::CNOT, (uint32_t)ctrl, (uint32_t)tgt);
            }
        }
    }
    append_pauli_layers(c, f.pauli);
    return c;
}

Circuit linear_circuit(const BitMatrix &delta) {
    size_t n = delta.num_rows();
    BitMatrix m = delta;
    // Row operations E_k ... E_1 Delta = I, each "row t ^= row c" being CNOT(c, t).
    std::vector<std::pair<uint32_t, uint32_t>> ops;
    for (size_t c = 0; c < n; c++) {
        if (!m.get(c, c)) {
            size_t r = c + 1;
            while (r < n && !m.get(r, c)) {
                r++;
            }
            if (r == n) {
                throw Error(ErrorKind::Singular, "linear map is not invertible");
            }
            m.xor_row(c, r);
            ops.push_back({(uint32_t)r, (uint32_t)c});
        }
        for (size_t r = 0; r < n; r++) {
            if (r != c && m.get(r, c)) {
                m.xor_row(r, c);
                ops.push_back({(uint32_t)c, (uint32_t)r});
            }
        }
    }
    // Delta = E_1 E_2 ... E_k, so E_k acts first.
    Circuit out(n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        out.append(GateKind::CNOT, it->first, it->second);
    }
    return out;
}

Circuit hfree_to_circuit(const HFreeOp &f) {
    if (f.is_borel()) {
        return borel_to_circuit(f);
    }
    size_t n = f.num_qubits();
    Circuit c(n);
    append_phase_layers(c, f.gamma);
    c.begin_stage("CX");
    c.append(linear_circuit(f.delta));
    append_pauli_layers(c, f.pauli);
    return c;
}

Tableau linear_tableau(const BitMatrix &delta) {
    return tableau_without_pauli(BitMatrix(delta.num_rows(), delta.num_rows()), delta);
}

Tableau hs_tableau(const HSLayer &w) {
    size_t n = w.h.size();
    if (w.perm.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "h and S have different sizes");
    }
    Tableau t(n);
    Permutation inv = w.perm.inverse();
    for (size_t i = 0; i < n; i++) {
        size_t q = inv(i);
        bool had = w.h.get(q);
        t.xs[i] = PauliOp::single(n, q, had ? 'Z' : 'X');
        t.zs[i] = PauliOp::single(n, q, had ? 'X' : 'Z');
    }
    return t;
}

Circuit hs_circuit(const HSLayer &w) {
    size_t n = w.h.size();
    Circuit c(n);
    c.begin_stage("SWAP");
    // The permutation layer moves the content of wire S(i) onto wire i.
    // Track which original wire sits where and sort by selection.
    std::vector<uint32_t> content(n);
    std::vector<uint32_t> where(n);
    for (size_t i = 0; i < n; i++) {
        content[i] = (uint32_t)i;
        where[i] = (uint32_t)i;
    }
    for (size_t i = 0; i < n; i++) {
        uint32_t want = w.perm(i);
        uint32_t at = where[want];
        if (at != i) {
            c.append(GateKind::SWAP, (uint32_t)i, at);
            uint32_t displaced = content[i];
            std::swap(content[i], content[at]);
            where[want] = (uint32_t)i;
            where[displaced] = at;
        }
    }
    c.begin_stage("H");
    for (size_t q = 0; q < n; q++) {
        if (w.h.get(q)) {
            c.append(GateKind::H, (uint32_t)q);
        }
    }
    return c;
}

bool rule_allows_gamma(const BitVector &h, const Permutation &perm, size_t i, size_t j) {
    bool hi = h.get(i);
    bool hj = h.get(j);
    if (!hi && !hj) {
        return false;  // C1, including the diagonal.
    }
    if (hi && !hj && perm(i) > perm(j)) {
        return false;  // C2.
    }
    if (!hi && hj && perm(j) > perm(i)) {
        return false;  // C2 with the roles of i and j exchanged.
    }
    return true;
}

bool rule_allows_delta(const BitVector &h, const Permutation &perm, size_t i, size_t j) {
    if (i == j) {
        return true;
    }
    bool hi = h.get(i);
    bool hj = h.get(j);
    if (!hi && !hj && perm(i) > perm(j)) {
        return false;  // C3.
    }
    if (hi && hj && perm(i) < perm(j)) {
        return false;  // C4.
    }
    if (hi && !hj) {
        return false;  // C5.
    }
    return true;
}

bool check_rules_c1c5(const BitVector &h, const Permutation &perm, const BitMatrix &gamma, const BitMatrix &delta) {
    size_t n = h.size();
    if (perm.size() != n || gamma.num_rows() != n || delta.num_rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "rule check with inconsistent sizes");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (gamma.get(i, j) && !rule_allows_gamma(h, perm, i, j)) {
                return false;
            }
            if (delta.get(i, j) && !rule_allows_delta(h, perm, i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<HFreeOp> conjugate_by_hs(const HFreeOp &f, const HSLayer &w) {
    if (!f.is_borel()) {
        throw Error(ErrorKind::NotBorel, "conjugate_by_hs expects a Borel element");
    }
    Tableau tw = hs_tableau(w);
    Tableau conj = compose(inverse(tw), compose(hfree_to_tableau(f), tw));
    return try_tableau_to_hfree(conj);
}

int64_t qmallows_weight(const BitVector &h, const Permutation &perm) {
    int64_t n = (int64_t)h.size();
    int64_t total = n * (n - 1) / 2 + (int64_t)h.popcount();
    RankSet remaining(h.size());
    for (size_t i = 0; i < h.size(); i++) {
        // Later indices j with S(j) > S(i).
        int64_t greater = (int64_t)(remaining.size() - remaining.count_less(perm(i)) - 1);
        total += h.get(i) ? greater : -greater;
        remaining.erase(perm(i));
    }
    return total;
}

BitVector complement(const BitVector &h) {
    BitVector out(h.size());
    for (size_t i = 0; i < h.size(); i++) {
        out.set(i, !h.get(i));
    }
    return out;
}

}  // namespace cliffc
