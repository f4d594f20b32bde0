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

#include "cliffc/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cliffc/error.h"

namespace cliffc {

namespace {

struct NamedGate {
    std::string_view name;
    GateKind kind;
};

constexpr NamedGate kGateNames[] = {
    {"x", GateKind::X},
    {"z", GateKind::Z},
    {"p", GateKind::P},
    {"s", GateKind::P},
    {"pdg", GateKind::PDG},
    {"sdg", GateKind::PDG},
    {"h", GateKind::H},
    {"cnot", GateKind::CNOT},
    {"cx", GateKind::CNOT},
    {"cz", GateKind::CZ},
    {"swap", GateKind::SWAP},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) {
            k++;
        }
        size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t') {
            k++;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

uint32_t parse_index(std::string_view word, size_t line_no) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size() || value == 0) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad qubit index '" + std::string(word) + "'");
    }
    return value;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return (char)std::tolower(c); });
    return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "x";
        case GateKind::Z:
            return "z";
        case GateKind::P:
            return "p";
        case GateKind::PDG:
            return "pdg";
        case GateKind::H:
            return "h";
        case GateKind::CNOT:
            return "cnot";
        case GateKind::CZ:
            return "cz";
        case GateKind::SWAP:
            return "swap";
    }
    return "?";
}

void Circuit::append(GateKind kind, uint32_t q0, uint32_t q1) {
    Gate g{kind, q0, q1};
    if (q0 >= num_qubits || (g.is_two_qubit() && (q1 >= num_qubits || q1 == q0))) {
        throw Error(ErrorKind::OutOfRange, "gate qubits out of range or repeated");
    }
    if (!g.is_two_qubit()) {
        g.q1 = 0;
    }
    gates.push_back(g);
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits != num_qubits) {
        throw Error(ErrorKind::DimensionMismatch, "appending circuit of a different width");
    }
    size_t offset = gates.size();
    for (const auto &s : other.stages) {
        stages.push_back({s.label, s.begin + offset});
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void Circuit::begin_stage(std::string label) {
    stages.push_back({std::move(label), gates.size()});
}

std::pair<size_t, size_t> Circuit::stage_range(size_t k) const {
    size_t end = k + 1 < stages.size() ? stages[k + 1].begin : gates.size();
    return {stages[k].begin, end};
}

size_t Circuit::two_qubit_count() const {
    return (size_t)std::count_if(gates.begin(), gates.end(), [](const Gate &g) { return g.is_two_qubit(); });
}

size_t Circuit::count(GateKind kind) const {
    return (size_t)std::count_if(gates.begin(), gates.end(), [kind](const Gate &g) { return g.kind == kind; });
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::P) {
            g.kind = GateKind::PDG;
        } else if (g.kind == GateKind::PDG) {
            g.kind = GateKind::P;
        }
        out.gates.push_back(g);
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    size_t declared = 0;
    size_t max_index = 0;
    std::vector<StageMark> stages;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string_view body = trim(line.substr(1));
            if (body.starts_with("qubits:")) {
                declared = parse_index(trim(body.substr(7)), line_no);
            } else if (body.starts_with("stage:")) {
                stages.push_back({std::string(trim(body.substr(6))), c.gates.size()});
            }
            continue;
        }
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = trim(line.substr(0, hash));
        }
        auto words = split_words(line);
        std::string name = lower(words[0]);
        const NamedGate *found = nullptr;
        for (const auto &ng : kGateNames) {
            if (ng.name == name) {
                found = &ng;
            }
        }
        if (found == nullptr) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
        }
        Gate g{found->kind, 0, 0};
        size_t arity = g.is_two_qubit() ? 2 : 1;
        if (words.size() != arity + 1) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": wrong number of qubits");
        }
        g.q0 = parse_index(words[1], line_no) - 1;
        if (arity == 2) {
            g.q1 = parse_index(words[2], line_no) - 1;
            if (g.q1 == g.q0) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": repeated qubit");
            }
            max_index = std::max<size_t>(max_index, g.q1 + 1);
        }
        max_index = std::max<size_t>(max_index, g.q0 + 1);
        c.gates.push_back(g);
    }
    if (declared != 0 && max_index > declared) {
        throw Error(ErrorKind::Parse, "gate index exceeds declared qubit count");
    }
    c.num_qubits = declared != 0 ? declared : max_index;
    if (c.num_qubits == 0) {
        throw Error(ErrorKind::Parse, "circuit has no qubits; add a '# qubits: N' line");
    }
    c.stages = std::move(stages);
    return c;
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "# qubits: " << circuit.num_qubits << "\n";
    size_t next_stage = 0;
    for (size_t k = 0; k <= circuit.gates.size(); k++) {
        while (next_stage < circuit.stages.size() && circuit.stages[next_stage].begin == k) {
            out << "# stage: " << circuit.stages[next_stage].label << "\n";
            next_stage++;
        }
        if (k == circuit.gates.size()) {
            break;
        }
        const Gate &g = circuit.gates[k];
        out << gate_name(g.kind) << " " << (g.q0 + 1);
        if (g.is_two_qubit()) {
            out << " " << (g.q1 + 1);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cliffc
