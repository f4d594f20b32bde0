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

#include "cliffc/tableau.h"

namespace cliffc {

namespace {

void check_gate(const Gate &g, size_t n) {
    if (g.q0 >= n || (g.is_two_qubit() && (g.q1 >= n || g.q1 == g.q0))) {
        throw Error(ErrorKind::OutOfRange, "gate does not fit the tableau");
    }
}

void flip_sign(PauliOp &p) {
    p.phase ^= 2;
}

}  // namespace

Tableau::Tableau(size_t num_qubits) : xs(num_qubits, PauliOp(num_qubits)), zs(num_qubits, PauliOp(num_qubits)) {
}

Tableau identity_tableau(size_t num_qubits) {
    Tableau t(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        t.xs[q].xs.set(q, true);
        t.zs[q].zs.set(q, true);
    }
    return t;
}

PauliOp Tableau::operator()(const PauliOp &p) const {
    size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli size differs from tableau size");
    }
    // Rewrite Y as i*X*Z so that p = i^e * prod_q X_q^x Z_q^z.
    size_t y_count = (p.xs & p.zs).popcount();
    PauliOp out(n);
    out.phase = (uint8_t)((p.phase + y_count) & 3);
    for (size_t q = 0; q < n; q++) {
        if (p.xs.get(q)) {
            out *= xs[q];
        }
        if (p.zs.get(q)) {
            out *= zs[q];
        }
    }
    return out;
}

std::string Tableau::str() const {
    std::string out;
    for (size_t q = 0; q < num_qubits(); q++) {
        out += "X" + std::to_string(q + 1) + " -> " + xs[q].str() + "\n";
    }
    for (size_t q = 0; q < num_qubits(); q++) {
        out += "Z" + std::to_string(q + 1) + " -> " + zs[q].str() + "\n";
    }
    return out;
}

std::string Tableau::key() const {
    std::string out;
    auto add = [&](const PauliOp &p) {
        out.push_back((char)p.phase);
        for (size_t w = 0; w < p.xs.num_words(); w++) {
            out.append(reinterpret_cast<const char *>(&p.xs.words()[w]), 8);
            out.append(reinterpret_cast<const char *>(&p.zs.words()[w]), 8);
        }
    };
    for (const auto &p : xs) {
        add(p);
    }
    for (const auto &p : zs) {
        add(p);
    }
    return out;
}

void conjugate_pauli(PauliOp &p, const Gate &g) {
    uint32_t a = g.q0;
    uint32_t b = g.q1;
    bool xa = p.xs.get(a);
    bool za = p.zs.get(a);
    switch (g.kind) {
        case GateKind::X:
            if (za) {
                flip_sign(p);
            }
            break;
        case GateKind::Z:
            if (xa) {
                flip_sign(p);
            }
            break;
        case GateKind::P:
            // X -> Y, Y -> -X.
            if (xa && za) {
                flip_sign(p);
            }
            p.zs.set(a, za ^ xa);
            break;
        case GateKind::PDG:
            // X -> -Y, Y -> X.
            if (xa && !za) {
                flip_sign(p);
            }
            p.zs.set(a, za ^ xa);
            break;
        case GateKind::H:
            if (xa && za) {
                flip_sign(p);
            }
            p.xs.set(a, za);
            p.zs.set(a, xa);
            break;
        case GateKind::CNOT: {
            bool xb = p.xs.get(b);
            bool zb = p.zs.get(b);
            if (xa && zb && (xb == za)) {
                flip_sign(p);
            }
            p.xs.set(b, xb ^ xa);
            p.zs.set(a, za ^ zb);
            break;
        }
        case GateKind::CZ: {
            bool xb = p.xs.get(b);
            bool zb = p.zs.get(b);
            if (xa && xb && (za != zb)) {
                flip_sign(p);
            }
            p.zs.set(a, za ^ xb);
            p.zs.set(b, zb ^ xa);
            break;
        }
        case GateKind::SWAP: {
            bool xb = p.xs.get(b);
            bool zb = p.zs.get(b);
            p.xs.set(a, xb);
            p.zs.set(a, zb);
            p.xs.set(b, xa);
            p.zs.set(b, za);
            break;
        }
    }
}

void apply_gate_inplace(Tableau &t, const Gate &g, Side side) {
    check_gate(g, t.num_qubits());
    if (side == Side::Left) {
        for (auto &p : t.xs) {
            conjugate_pauli(p, g);
        }
        for (auto &p : t.zs) {
            conjugate_pauli(p, g);
        }
        return;
    }
    // Right multiplication: the image of X_q under U*g is U (g X_q g^-1) U^-1.
    uint32_t a = g.q0;
    uint32_t b = g.q1;
    switch (g.kind) {
        case GateKind::X:
            flip_sign(t.zs[a]);
            break;
        case GateKind::Z:
            flip_sign(t.xs[a]);
            break;
        case GateKind::P:
            // g X g^-1 = Y = i X Z.
            t.xs[a] *= t.zs[a];
            t.xs[a].phase = (uint8_t)((t.xs[a].phase + 1) & 3);
            break;
        case GateKind::PDG:
            t.xs[a] *= t.zs[a];
            t.xs[a].phase = (uint8_t)((t.xs[a].phase + 3) & 3);
            break;
        case GateKind::H:
            std::swap(t.xs[a], t.zs[a]);
            break;
        case GateKind::CNOT:
            t.xs[a] *= t.xs[b];
            {
                PauliOp zc = t.zs[a];
                zc *= t.zs[b];
                t.zs[b] = std::move(zc);
            }
            break;
        case GateKind::CZ: {
            PauliOp za = t.zs[a];
            PauliOp zb = t.zs[b];
            t.xs[a] *= zb;
            za *= t.xs[b];
            t.xs[b] = std::move(za);
            break;
        }
        case GateKind::SWAP:
            std::swap(t.xs[a], t.xs[b]);
            std::swap(t.zs[a], t.zs[b]);
            break;
    }
}

Tableau apply_gate(const Tableau &t, const Gate &g, Side side) {
    Tableau r = t;
    apply_gate_inplace(r, g, side);
    return r;
}

Tableau from_circuit(const Circuit &c) {
    Tableau t = identity_tableau(c.num_qubits);
    for (const auto &g : c.gates) {
        apply_gate_inplace(t, g, Side::Left);
    }
    return t;
}

Tableau compose(const Tableau &a, const Tableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "composing tableaux of different sizes");
    }
    Tableau out(a.num_qubits());
    for (size_t q = 0; q < a.num_qubits(); q++) {
        out.xs[q] = a(b.xs[q]);
        out.zs[q] = a(b.zs[q]);
    }
    return out;
}

Tableau inverse(const Tableau &t) {
    size_t n = t.num_qubits();
    // Symplectic inverse of [[A,B],[C,D]] is [[D^T,B^T],[C^T,A^T]].
    Tableau inv(n);
    for (size_t i = 0; i < n; i++) {
        const PauliOp &xi = t.xs[i];
        const PauliOp &zi = t.zs[i];
        for (size_t j = 0; j < n; j++) {
            if (zi.zs.get(j)) {
                inv.xs[j].xs.set(i, true);
            }
            if (xi.zs.get(j)) {
                inv.xs[j].zs.set(i, true);
            }
            if (zi.xs.get(j)) {
                inv.zs[j].xs.set(i, true);
            }
            if (xi.xs.get(j)) {
                inv.zs[j].zs.set(i, true);
            }
        }
    }
    // Fix signs so that t * inv is exactly the identity.
    for (size_t j = 0; j < n; j++) {
        if (t(inv.xs[j]).phase != 0) {
            flip_sign(inv.xs[j]);
        }
        if (t(inv.zs[j]).phase != 0) {
            flip_sign(inv.zs[j]);
        }
    }
    return inv;
}

bool equal_up_to_global_phase(const Tableau &a, const Tableau &b) {
    return a == b;
}

bool is_symplectic(const Tableau &t) {
    size_t n = t.num_qubits();
    for (size_t i = 0; i < n; i++) {
        if (t.xs[i].num_qubits() != n || t.zs[i].num_qubits() != n) {
            return false;
        }
        if ((t.xs[i].phase & 1) != 0 || (t.zs[i].phase & 1) != 0) {
            return false;
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (commutes(t.xs[i], t.zs[j]) != (i != j)) {
                return false;
            }
            if (j > i && (!commutes(t.xs[i], t.xs[j]) || !commutes(t.zs[i], t.zs[j]))) {
                return false;
            }
        }
    }
    return true;
}

PauliOp right_pauli_difference(const Tableau &t, const Tableau &base) {
    size_t n = t.num_qubits();
    if (base.num_qubits() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli difference of tableaux with different sizes");
    }
    // t = base * Q with Q = X^c Z^d: Q X_i Q = (-1)^{d_i} X_i and Q Z_i Q = (-1)^{c_i} Z_i.
    PauliOp q(n);
    for (size_t i = 0; i < n; i++) {
        const PauliOp &a = t.xs[i];
        const PauliOp &b = base.xs[i];
        if (a.xs != b.xs || a.zs != b.zs || t.zs[i].xs != base.zs[i].xs || t.zs[i].zs != base.zs[i].zs) {
            throw Error(ErrorKind::InvalidTableau, "tableaux differ beyond image signs");
        }
        if (((a.phase - b.phase) & 3) == 2) {
            q.zs.set(i, true);
        } else if (a.phase != b.phase) {
            throw Error(ErrorKind::InvalidTableau, "image phases differ by a non-sign factor");
        }
        uint8_t dz = (uint8_t)((t.zs[i].phase - base.zs[i].phase) & 3);
        if (dz == 2) {
            q.xs.set(i, true);
        } else if (dz != 0) {
            throw Error(ErrorKind::InvalidTableau, "image phases differ by a non-sign factor");
        }
    }
    return q;
}

PauliOp left_pauli_difference(const Tableau &t, const Tableau &base) {
    // t = base * Q = (base Q base^-1) * base.
    PauliOp q = right_pauli_difference(t, base);
    PauliOp o = base(q);
    o.phase = 0;
    return o;
}

Tableau pauli_tableau(const PauliOp &p) {
    size_t n = p.num_qubits();
    Tableau t = identity_tableau(n);
    for (size_t q = 0; q < n; q++) {
        if (p.zs.get(q)) {
            flip_sign(t.xs[q]);
        }
        if (p.xs.get(q)) {
            flip_sign(t.zs[q]);
        }
    }
    return t;
}

}  // namespace cliffc
