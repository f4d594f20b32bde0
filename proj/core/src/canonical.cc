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

#include "cliffc/canonical.h"

#include <array>

namespace cliffc {

HFreeOp CanonicalForm::left() const {
    return HFreeOp(PauliOp(num_qubits()), gamma, delta);
}

HFreeOp CanonicalForm::right() const {
    return HFreeOp(pauli_prime, gamma_prime, delta_prime);
}

HSLayer CanonicalForm::layer() const {
    return HSLayer{h, perm};
}

namespace {

bool touches(const PauliOp &p, size_t q) {
    return p.xs.get(q) || p.zs.get(q);
}

void append_conjugating(Circuit &c, PauliOp &tracked, GateKind kind, size_t q0, size_t q1) {
    c.append(kind, (uint32_t)q0, (uint32_t)q1);
    conjugate_pauli(tracked, c.gates.back());
}

Circuit pauli_disentangling_gates(const PauliOp &o) {
    size_t n = o.num_qubits();
    Circuit c(n);
    PauliOp p = o;
    if (auto first = o.xs.first_one()) {
        size_t i = *first;
        for (size_t j = i + 1; j < n; j++) {
            if (o.xs.get(j)) {
                append_conjugating(c, p, GateKind::CNOT, i, j);
            }
        }
        for (size_t j = 0; j < n; j++) {
            if (j != i && p.zs.get(j)) {
                append_conjugating(c, p, GateKind::CZ, i, j);
            }
        }
    } else if (auto last = o.zs.last_one()) {
        size_t j = *last;
        for (size_t i = 0; i < j; i++) {
            if (o.zs.get(i)) {
                append_conjugating(c, p, GateKind::CNOT, i, j);
            }
        }
    }
    return c;
}

size_t disentangle_row(Tableau &v, size_t r, const std::vector<bool> &done, Circuit &left, std::vector<Gate> &right) {
    size_t n = v.num_qubits();
    Circuit gates = pauli_disentangling_gates(v.zs[r]);
    for (const auto &g : gates.gates) {
        if (done[g.q0] || (g.is_two_qubit() && done[g.q1])) {
            throw Error(ErrorKind::Internal, "disentangling touched a finished qubit");
        }
        apply_gate_inplace(v, g, Side::Left);
    }
    left.append(gates);
    auto k = single_qubit_support(v.zs[r]);
    if (!k.has_value() || done[*k]) {
        throw Error(ErrorKind::Internal, "Z image did not disentangle");
    }
    for (size_t i = r + 1; i < n; i++) {
        if (touches(v.zs[i], *k)) {
            Gate g{GateKind::CNOT, (uint32_t)r, (uint32_t)i};
            apply_gate_inplace(v, g, Side::Right);
            right.push_back(g);
        }
    }
    for (size_t i = r + 1; i < n; i++) {
        if (touches(v.xs[i], *k)) {
            Gate g{GateKind::CZ, (uint32_t)r, (uint32_t)i};
            apply_gate_inplace(v, g, Side::Right);
            right.push_back(g);
        }
    }
    if (single_qubit_support(v.xs[r]) != k) {
        throw Error(ErrorKind::Internal, "X image did not disentangle");
    }
    return *k;
}

Tableau product_of_right_gates(size_t n, const std::vector<Gate> &right) {
    Tableau t = identity_tableau(n);
    for (const auto &g : right) {
        apply_gate_inplace(t, g, Side::Right);
    }
    return t;
}

struct LocalClifford {
    bool a, b, c, d, e;
    PauliOp x_image;
    PauliOp z_image;
};

// Single-qubit Cliffords P^a H^b P^c X^d Z^e, with c = 0 when b = 0.
const std::vector<LocalClifford> &local_cliffords() {
    static const std::vector<LocalClifford> table = [] {
        std::vector<LocalClifford> out;
        for (int bits = 0; bits < 32; bits++) {
            bool a = bits & 1, b = bits & 2, c = bits & 4, d = bits & 8, e = bits & 16;
            if (!b && c) {
                continue;
            }
            Circuit circ(1);
            if (e) circ.append(GateKind::Z, 0);
            if (d) circ.append(GateKind::X, 0);
            if (c) circ.append(GateKind::P, 0);
            if (b) circ.append(GateKind::H, 0);
            if (a) circ.append(GateKind::P, 0);
            Tableau t = from_circuit(circ);
            out.push_back({a, b, c, d, e, t.xs[0], t.zs[0]});
        }
        return out;
    }();
    return table;
}

PauliOp restrict_to(const PauliOp &p, size_t q) {
    PauliOp out(1);
    out.xs.set(0, p.xs.get(q));
    out.zs.set(0, p.zs.get(q));
    out.phase = p.phase;
    return out;
}

}  // namespace

PauliDisentangling disentangle_pauli(const PauliOp &o) {
    Circuit gates = pauli_disentangling_gates(o);
    PauliOp result = o;
    for (const auto &g : gates.gates) {
        conjugate_pauli(result, g);
    }
    HFreeOp b = tableau_to_hfree(from_circuit(gates));
    return {std::move(b), std::move(result), std::move(gates)};
}

CliffordStep disentangle_clifford_step(const Tableau &u, size_t row, const std::vector<bool> &done) {
    size_t n = u.num_qubits();
    if (row >= n || done.size() != n) {
        throw Error(ErrorKind::OutOfRange, "row or done-set does not match the tableau");
    }
    Tableau v = u;
    Circuit left(n);
    std::vector<Gate> right;
    size_t k = disentangle_row(v, row, done, left, right);
    Circuit right_gates(n);
    right_gates.gates = right;
    HFreeOp b1 = tableau_to_hfree(from_circuit(left));
    HFreeOp b2 = tableau_to_hfree(product_of_right_gates(n, right));
    return {k, std::move(b1), std::move(b2), std::move(left), std::move(right_gates)};
}

NonEntanglingParts decompose_nonentangling(const Tableau &u) {
    size_t n = u.num_qubits();
    BitVector h(n);
    std::vector<uint32_t> images(n, UINT32_MAX);
    std::vector<bool> used(n, false);
    BitMatrix gamma1(n, n);
    Circuit right(n);
    std::vector<const LocalClifford *> locals(n);
    for (size_t i = 0; i < n; i++) {
        auto qx = single_qubit_support(u.xs[i]);
        auto qz = single_qubit_support(u.zs[i]);
        if (!qx.has_value() || qx != qz || used[*qx]) {
            throw Error(ErrorKind::NotNonEntangling, "row " + std::to_string(i + 1) + " is entangling");
        }
        size_t q = *qx;
        used[q] = true;
        images[q] = (uint32_t)i;
        PauliOp x1 = restrict_to(u.xs[i], q);
        PauliOp z1 = restrict_to(u.zs[i], q);
        const LocalClifford *found = nullptr;
        for (const auto &lc : local_cliffords()) {
            if (lc.x_image == x1 && lc.z_image == z1) {
                found = &lc;
                break;
            }
        }
        if (found == nullptr) {
            throw Error(ErrorKind::InvalidTableau, "row " + std::to_string(i + 1) + " is not a Clifford action");
        }
        h.set(q, found->b);
        gamma1.set(q, q, found->a);
        locals[i] = found;
    }
    for (size_t i = 0; i < n; i++) {
        if (locals[i]->e) right.append(GateKind::Z, (uint32_t)i);
        if (locals[i]->d) right.append(GateKind::X, (uint32_t)i);
        if (locals[i]->c) right.append(GateKind::P, (uint32_t)i);
    }
    NonEntanglingParts parts{
        HFreeOp(PauliOp(n), std::move(gamma1), BitMatrix::identity(n)),
        HSLayer{std::move(h), Permutation(std::move(images))},
        tableau_to_hfree(from_circuit(right)),
    };
    Tableau check = compose(hfree_to_tableau(parts.f1), compose(hs_tableau(parts.w), hfree_to_tableau(parts.f2)));
    if (check != u) {
        throw Error(ErrorKind::Internal, "non-entangling decomposition does not recompose");
    }
    return parts;
}

BorelSplit split_borel(const HFreeOp &l, const BitVector &h, const Permutation &perm) {
    if (!l.is_borel()) {
        throw Error(ErrorKind::NotBorel, "split_borel expects a Borel element");
    }
    size_t n = l.num_qubits();
    if (h.size() != n || perm.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "split_borel with inconsistent sizes");
    }
    BitVector hbar = complement(h);
    // Unknowns: k^-1 = F(., G2, D2) obeys the rules at h, m = F(., Gm, Dm) at the complement.
    // m = k^-1 l gives Dm = D2 Dl and Gm = Gl + Dl^T G2 Dl.
    constexpr int kFixed = -1;
    std::vector<int> d2(n * n, kFixed), g2(n * n, kFixed), dm(n * n, kFixed), gm(n * n, kFixed);
    std::vector<std::array<size_t, 3>> unknowns;
    auto add = [&](std::vector<int> &index, size_t which, bool lower, const BitVector &hh,
                   bool (*allows)(const BitVector &, const Permutation &, size_t, size_t)) {
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                bool in_shape = lower ? i > j : i <= j;
                if (in_shape && allows(hh, perm, i, j)) {
                    index[i * n + j] = (int)unknowns.size();
                    unknowns.push_back({which, i, j});
                }
            }
        }
    };
    add(d2, 0, true, h, rule_allows_delta);
    add(g2, 1, false, h, rule_allows_gamma);
    add(dm, 2, true, hbar, rule_allows_delta);
    add(gm, 3, false, hbar, rule_allows_gamma);

    const BitMatrix &dl = l.delta;
    const BitMatrix &gl = l.gamma;
    size_t num_eq = n * (n - 1) / 2 + n * (n + 1) / 2;
    BitMatrix a(num_eq, unknowns.size());
    BitVector rhs(num_eq);
    size_t eq = 0;
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < r; c++, eq++) {
            rhs.set(eq, dl.get(r, c));
            for (size_t t = c; t < r; t++) {
                if (d2[r * n + t] != kFixed && dl.get(t, c)) {
                    a.flip(eq, d2[r * n + t]);
                }
            }
            if (dm[r * n + c] != kFixed) {
                a.flip(eq, dm[r * n + c]);
            }
        }
    }
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r; c < n; c++, eq++) {
            rhs.set(eq, gl.get(r, c));
            for (size_t s = 0; s < n; s++) {
                for (size_t t = s; t < n; t++) {
                    int var = g2[s * n + t];
                    if (var == kFixed) {
                        continue;
                    }
                    bool coef = dl.get(s, r) && dl.get(t, c);
                    if (s != t) {
                        coef ^= dl.get(t, r) && dl.get(s, c);
                    }
                    if (coef) {
                        a.flip(eq, var);
                    }
                }
            }
            if (gm[r * n + c] != kFixed) {
                a.flip(eq, gm[r * n + c]);
            }
        }
    }

    BitVector x;
    try {
        x = solve_linear(a, rhs);
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::Inconsistent) {
            throw Error(ErrorKind::NoSolution, "Borel split has no solution");
        }
        if (err.kind() == ErrorKind::Underdetermined) {
            throw Error(ErrorKind::NonUniqueSolution, "Borel split is not unique");
        }
        throw;
    }

    BitMatrix delta2 = BitMatrix::identity(n);
    BitMatrix gamma2(n, n);
    for (size_t v = 0; v < unknowns.size(); v++) {
        if (!x.get(v)) {
            continue;
        }
        auto [which, i, j] = unknowns[v];
        if (which == 0) {
            delta2.set(i, j, true);
        } else if (which == 1) {
            gamma2.set(i, j, true);
            gamma2.set(j, i, true);
        }
    }
    BitMatrix delta_k = mat_inv(delta2);
    BitMatrix gamma_k = mat_mul(transpose(delta_k), mat_mul(gamma2, delta_k));
    HFreeOp k(PauliOp(n), std::move(gamma_k), std::move(delta_k));
    HFreeOp m = hfree_mul(hfree_inverse(k), l);
    if (!check_rules_c1c5(h, perm, k.gamma, k.delta) || !check_rules_c1c5(hbar, perm, m.gamma, m.delta)) {
        throw Error(ErrorKind::Internal, "Borel split violates the rule pattern");
    }
    return {std::move(k), std::move(m)};
}

CanonicalForm canonical_form(const Tableau &u) {
    size_t n = u.num_qubits();
    if (n == 0 || !is_symplectic(u)) {
        throw Error(ErrorKind::InvalidTableau, "input is not a valid Clifford tableau");
    }
    Tableau v = u;
    std::vector<bool> done(n, false);
    Circuit left(n);
    std::vector<Gate> right;
    for (size_t r = 0; r < n; r++) {
        done[disentangle_row(v, r, done, left, right)] = true;
    }
    NonEntanglingParts parts = decompose_nonentangling(v);
    // u = b1^-1 f1 W f2 b2^-1; split L = b1^-1 f1 and absorb the rest on the right.
    HFreeOp b1 = tableau_to_hfree(from_circuit(left));
    HFreeOp l = hfree_mul(hfree_inverse(b1), parts.f1);
    BorelSplit split = split_borel(l, parts.w.h, parts.w.perm);

    Tableau rest = compose(inverse(hs_tableau(parts.w)), compose(inverse(hfree_to_tableau(split.k)), u));
    HFreeOp right_factor = tableau_to_hfree(rest);
    if (!right_factor.is_borel()) {
        throw Error(ErrorKind::Internal, "right factor of the canonical form is not Borel");
    }
    CanonicalForm cf;
    cf.gamma = std::move(split.k.gamma);
    cf.delta = std::move(split.k.delta);
    cf.h = std::move(parts.w.h);
    cf.perm = std::move(parts.w.perm);
    cf.pauli_prime = std::move(right_factor.pauli);
    cf.gamma_prime = std::move(right_factor.gamma);
    cf.delta_prime = std::move(right_factor.delta);
    return cf;
}

Tableau canonical_to_tableau(const CanonicalForm &cf) {
    return compose(hfree_to_tableau(cf.left()), compose(hs_tableau(cf.layer()), hfree_to_tableau(cf.right())));
}

Circuit canonical_to_circuit(const CanonicalForm &cf) {
    Circuit c(cf.num_qubits());
    c.append(borel_to_circuit(cf.right()));
    c.append(hs_circuit(cf.layer()));
    c.append(borel_to_circuit(cf.left()));
    return c;
}

bool canonical_invariants_hold(const CanonicalForm &cf) {
    size_t n = cf.num_qubits();
    for (const BitMatrix *m : {&cf.gamma, &cf.delta, &cf.gamma_prime, &cf.delta_prime}) {
        if (m->num_rows() != n || m->num_cols() != n) {
            return false;
        }
    }
    if (cf.perm.size() != n || cf.pauli_prime.num_qubits() != n) {
        return false;
    }
    return is_lower_unit_triangular(cf.delta) && is_lower_unit_triangular(cf.delta_prime) && is_symmetric(cf.gamma) &&
           is_symmetric(cf.gamma_prime) && check_rules_c1c5(cf.h, cf.perm, cf.gamma, cf.delta);
}

}  // namespace cliffc
