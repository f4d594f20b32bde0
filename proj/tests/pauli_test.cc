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

#include "cliffc/pauli.h"

#include "gtest/gtest.h"

using namespace cliffc;

TEST(pauli, parse_and_print) {
    ASSERT_EQ(PauliOp::from_str("-iXYZ_").str(), "-iXYZI");
    ASSERT_EQ(PauliOp::from_str("XZ").str(), "+XZ");
    ASSERT_EQ(PauliOp::from_str("+iY").phase, 1);
    ASSERT_EQ(PauliOp::from_str("Y").letter(0), 'Y');
    ASSERT_THROW(PauliOp::from_str("XQ"), Error);
}

TEST(pauli, single_qubit_products) {
    auto p = [](const char *s) { return PauliOp::from_str(s); };
    ASSERT_EQ(pauli_mul(p("X"), p("Y")), p("+iZ"));
    ASSERT_EQ(pauli_mul(p("Y"), p("X")), p("-iZ"));
    ASSERT_EQ(pauli_mul(p("Z"), p("X")), p("+iY"));
    ASSERT_EQ(pauli_mul(p("X"), p("Z")), p("-iY"));
    ASSERT_EQ(pauli_mul(p("Y"), p("Y")), p("I"));
    ASSERT_EQ(pauli_mul(p("XX"), p("ZZ")), p("-YY"));
}

TEST(pauli, commutation) {
    auto p = [](const char *s) { return PauliOp::from_str(s); };
    ASSERT_TRUE(commutes(p("XX"), p("ZZ")));
    ASSERT_FALSE(commutes(p("XI"), p("ZZ")));
    ASSERT_TRUE(commutes(p("Y"), p("-Y")));
    ASSERT_FALSE(commutes(p("Y"), p("Z")));
}

TEST(pauli, support_and_weight) {
    ASSERT_EQ(single_qubit_support(PauliOp::from_str("IIYI")), 2);
    ASSERT_EQ(single_qubit_support(PauliOp::from_str("XIYI")), std::nullopt);
    ASSERT_EQ(single_qubit_support(PauliOp::from_str("III")), std::nullopt);
    ASSERT_EQ(PauliOp::from_str("XIYZ").weight(), 3);
    ASSERT_TRUE(PauliOp::from_str("-II").is_identity_up_to_phase());
    ASSERT_EQ(PauliOp::single(3, 1, 'Z').str(), "+IZI");
}

TEST(pauli, product_phase_exponent) {
    auto p = [](const char *s) { return PauliOp::from_str(s); };
    PauliOp a = p("XZ");
    a *= p("ZX");
    ASSERT_EQ(a, p("YY"));
    ASSERT_EQ(product_log_i(p("X"), p("Y")), 1);
}
