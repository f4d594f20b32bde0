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

#include "cliffc/serialize.h"

#include <algorithm>

namespace cliffc {

namespace {

using nlohmann::json;

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

size_t size_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" is not a non-negative integer");
    }
    return v.get<size_t>();
}

std::string string_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_string()) {
        throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" is not a string");
    }
    return v.get<std::string>();
}

BitMatrix square_field(const json &j, const char *key, size_t n) {
    BitMatrix m = bit_matrix_from_json(field(j, key));
    if (m.num_rows() != n || m.num_cols() != n) {
        throw Error(ErrorKind::Parse, std::string("matrix \"") + key + "\" is not n x n");
    }
    return m;
}

PauliOp pauli_field(const json &j, const char *key, size_t n) {
    PauliOp p = PauliOp::from_str(string_field(j, key));
    if (p.num_qubits() != n) {
        throw Error(ErrorKind::Parse, std::string("Pauli \"") + key + "\" has the wrong length");
    }
    return p;
}

std::vector<PauliOp> pauli_list(const json &j, const char *key, size_t n) {
    const json &v = field(j, key);
    if (!v.is_array() || v.size() != n) {
        throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" needs n Pauli strings");
    }
    std::vector<PauliOp> out;
    for (const auto &s : v) {
        if (!s.is_string()) {
            throw Error(ErrorKind::Parse, "Pauli image is not a string");
        }
        out.push_back(PauliOp::from_str(s.get<std::string>()));
        if (out.back().num_qubits() != n) {
            throw Error(ErrorKind::Parse, "Pauli image has the wrong length");
        }
    }
    return out;
}

json perm_to_json(const Permutation &p) {
    return json(p.images());
}

}  // namespace

json bit_matrix_to_json(const BitMatrix &m) {
    return json{{"n_rows", m.num_rows()}, {"n_cols", m.num_cols()}, {"rows", m.row_strings()}};
}

BitMatrix bit_matrix_from_json(const json &j) {
    size_t rows = size_field(j, "n_rows");
    size_t cols = size_field(j, "n_cols");
    const json &v = field(j, "rows");
    if (!v.is_array() || v.size() != rows) {
        throw Error(ErrorKind::Parse, "\"rows\" does not hold n_rows strings");
    }
    BitMatrix m(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        if (!v[i].is_string() || v[i].get<std::string>().size() != cols) {
            throw Error(ErrorKind::Parse, "matrix row is not a bit string of length n_cols");
        }
        m.set_row(i, BitVector::from_str(v[i].get<std::string>()));
    }
    return m;
}

json tableau_to_json(const Tableau &t) {
    json xs = json::array();
    json zs = json::array();
    for (size_t i = 0; i < t.num_qubits(); i++) {
        xs.push_back(t.xs[i].str());
        zs.push_back(t.zs[i].str());
    }
    return json{{"n", t.num_qubits()}, {"x_images", xs}, {"z_images", zs}};
}

Tableau tableau_from_json(const json &j) {
    size_t n = size_field(j, "n");
    Tableau t(n);
    t.xs = pauli_list(j, "x_images", n);
    t.zs = pauli_list(j, "z_images", n);
    return t;
}

json hfree_to_json(const HFreeOp &f) {
    return json{{"n", f.num_qubits()},
                {"pauli", f.pauli.str()},
                {"gamma", bit_matrix_to_json(f.gamma)},
                {"delta", bit_matrix_to_json(f.delta)}};
}

HFreeOp hfree_from_json(const json &j) {
    size_t n = size_field(j, "n");
    return HFreeOp(pauli_field(j, "pauli", n), square_field(j, "gamma", n), square_field(j, "delta", n));
}

json canonical_to_json(const CanonicalForm &cf) {
    return json{{"n", cf.num_qubits()},
                {"h", cf.h.str()},
                {"perm", perm_to_json(cf.perm)},
                {"gamma", bit_matrix_to_json(cf.gamma)},
                {"delta", bit_matrix_to_json(cf.delta)},
                {"pauli_prime", cf.pauli_prime.str()},
                {"gamma_prime", bit_matrix_to_json(cf.gamma_prime)},
                {"delta_prime", bit_matrix_to_json(cf.delta_prime)}};
}

CanonicalForm canonical_from_json(const json &j) {
    size_t n = size_field(j, "n");
    CanonicalForm cf;
    cf.h = BitVector::from_str(string_field(j, "h"));
    if (cf.h.size() != n) {
        throw Error(ErrorKind::Parse, "\"h\" has the wrong length");
    }
    const json &p = field(j, "perm");
    if (!p.is_array() || p.size() != n) {
        throw Error(ErrorKind::Parse, "\"perm\" needs n entries");
    }
    std::vector<uint32_t> images;
    for (const auto &v : p) {
        if (!v.is_number_unsigned() || v.get<size_t>() >= n) {
            throw Error(ErrorKind::Parse, "permutation entry out of range");
        }
        images.push_back(v.get<uint32_t>());
    }
    std::vector<uint32_t> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::Parse, "permutation has a repeated entry");
    }
    cf.perm = Permutation(std::move(images));
    cf.gamma = square_field(j, "gamma", n);
    cf.delta = square_field(j, "delta", n);
    cf.pauli_prime = pauli_field(j, "pauli_prime", n);
    cf.gamma_prime = square_field(j, "gamma_prime", n);
    cf.delta_prime = square_field(j, "delta_prime", n);
    return cf;
}

json qmallows_pmf_to_json(size_t n) {
    json entries = json::array();
    uint64_t den = symplectic_factor(n);
    for (const auto &e : exact_qmallows_pmf(n)) {
        entries.push_back(json{{"h", e.h.str()},
                               {"perm", perm_to_json(e.perm)},
                               {"weight", e.weight},
                               {"numerator", e.probability.num}});
    }
    return json{{"n", n}, {"denominator", den}, {"entries", entries}};
}

json mallows_pmf_to_json(size_t n) {
    if (n == 0 || n > 8) {
        throw Error(ErrorKind::TooLarge, "exact Mallows table supports 1 <= n <= 8");
    }
    std::vector<uint32_t> images(n);
    for (size_t i = 0; i < n; i++) {
        images[i] = (uint32_t)i;
    }
    json entries = json::array();
    uint64_t den = 0;
    do {
        Permutation perm(images);
        Rational p = mallows_probability(perm);
        den = p.den;
        entries.push_back(json{{"perm", perm_to_json(perm)}, {"inversions", inversion_number(perm)}, {"numerator", p.num}});
    } while (std::next_permutation(images.begin(), images.end()));
    return json{{"n", n}, {"denominator", den}, {"entries", entries}};
}

json rewrite_report_to_json(const RewriteResult &r) {
    return json{{"input_2q", r.input_2q}, {"output_2q", r.output_2q}, {"windows_applied", r.windows_applied}};
}

}  // namespace cliffc
