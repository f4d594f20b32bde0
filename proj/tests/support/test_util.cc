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

#include "test_util.h"

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#ifndef CLIFFC_FIXTURE_DIR
#error "CLIFFC_FIXTURE_DIR must be defined"
#endif

namespace cliffc::testing {

std::vector<Tableau> enumerate_cliffords(size_t n) {
    std::vector<Gate> gens;
    for (uint32_t a = 0; a < n; a++) {
        gens.push_back({GateKind::X, a});
        gens.push_back({GateKind::P, a});
        gens.push_back({GateKind::H, a});
        for (uint32_t b = 0; b < n; b++) {
            if (a != b) {
                gens.push_back({GateKind::CNOT, a, b});
            }
        }
    }
    std::vector<Tableau> out{identity_tableau(n)};
    std::unordered_set<std::string> seen{out[0].key()};
    for (size_t k = 0; k < out.size(); k++) {
        for (const auto &g : gens) {
            Tableau t = apply_gate(out[k], g, Side::Left);
            if (seen.insert(t.key()).second) {
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

Circuit random_circuit(size_t n, size_t num_gates, std::mt19937_64 &rng, bool cnot_only) {
    static constexpr GateKind kinds[] = {GateKind::X, GateKind::Z, GateKind::P, GateKind::H, GateKind::CNOT, GateKind::CZ};
    Circuit c(n);
    std::uniform_int_distribution<uint32_t> qubit(0, (uint32_t)n - 1);
    std::uniform_int_distribution<size_t> kind(0, 5);
    while (c.gates.size() < num_gates) {
        GateKind k = cnot_only ? GateKind::CNOT : kinds[kind(rng)];
        uint32_t a = qubit(rng);
        if (k == GateKind::CNOT || k == GateKind::CZ) {
            if (n < 2) {
                continue;
            }
            uint32_t b = qubit(rng);
            if (a == b) {
                continue;
            }
            c.append(k, a, b);
        } else {
            c.append(k, a);
        }
    }
    return c;
}

BitMatrix random_symmetric_invertible(size_t n, std::mt19937_64 &rng) {
    while (true) {
        BitMatrix a(n, n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i; j < n; j++) {
                bool v = rng() & 1;
                a.set(i, j, v);
                a.set(j, i, v);
            }
        }
        if (rank(a) == n) {
            return a;
        }
    }
}

std::string read_fixture(const std::string &name) {
    std::ifstream f(std::string(CLIFFC_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace cliffc::testing
