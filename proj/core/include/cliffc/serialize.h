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

#ifndef CLIFFC_SERIALIZE_H
#define CLIFFC_SERIALIZE_H

#include <nlohmann/json.hpp>

#include "cliffc/canonical.h"
#include "cliffc/cnot_advantage.h"
#include "cliffc/sampling.h"

namespace cliffc {

/// JSON encodings. Decoders check shapes and throw Parse; they do not check symplecticity.
///
///     BitMatrix      {"n_rows": N, "n_cols": M, "rows": ["0101", ...]}, column 1 first
///     Tableau        {"n": N, "x_images": ["+XZ", ...], "z_images": [...]}
///     HFreeOp        {"n": N, "pauli": "+II", "gamma": BitMatrix, "delta": BitMatrix}
///     CanonicalForm  {"n", "h": "10", "perm": [0-based images], "gamma", "delta",
///                     "pauli_prime", "gamma_prime", "delta_prime"}
nlohmann::json bit_matrix_to_json(const BitMatrix &m);
BitMatrix bit_matrix_from_json(const nlohmann::json &j);

nlohmann::json tableau_to_json(const Tableau &t);
Tableau tableau_from_json(const nlohmann::json &j);

nlohmann::json hfree_to_json(const HFreeOp &f);
HFreeOp hfree_from_json(const nlohmann::json &j);

nlohmann::json canonical_to_json(const CanonicalForm &cf);
CanonicalForm canonical_from_json(const nlohmann::json &j);

/// {"n": N, "denominator": D, "entries": [{"h", "perm", "weight", "numerator"}, ...]}.
nlohmann::json qmallows_pmf_to_json(size_t n);
/// {"n": N, "denominator": D, "entries": [{"perm", "inversions", "numerator"}, ...]}.
nlohmann::json mallows_pmf_to_json(size_t n);

nlohmann::json rewrite_report_to_json(const RewriteResult &r);

}  // namespace cliffc

#endif
