// Copyright 2026 The lcsmbqc Authors
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


#include "lcsmbqc/cyclo.hpp"

#include <gtest/gtest.h>

using namespace lcsmbqc;

TEST(phase, canonical_form) {
    Phase a(3, 2, 3);
    EXPECT_EQ(a.level(), 1);
    EXPECT_EQ(a.num(), 1);
    Phase z(3, 3, 27);
    EXPECT_EQ(z.level(), 0);
    EXPECT_EQ(z.num(), 0);
    EXPECT_EQ(Phase(5, 1, -1), Phase(5, 1, 4));
    EXPECT_EQ(Phase(3, 2, 6), Phase::omega(3, 2));
}

TEST(phase, rejects_bad_inputs) {
    EXPECT_THROW(Phase(4, 1, 1), std::invalid_argument);
    EXPECT_THROW(Phase(3, -1, 0), std::invalid_argument);
    EXPECT_THROW(Phase(3, 5, 1), std::invalid_argument);
    EXPECT_NO_THROW(Phase(3, 5, 1, 5));
    EXPECT_THROW(Phase::omega(3) * Phase::omega(5), std::invalid_argument);
}

TEST(phase, mul_examples) {
    EXPECT_TRUE((Phase(3, 1, 1) * Phase(3, 1, 2)).is_one());
    EXPECT_EQ(Phase(3, 2, 1) * Phase(3, 2, 2), Phase(3, 1, 1));
    EXPECT_TRUE((Phase(2, 2, 1) * Phase(2, 2, 3)).is_one());
    EXPECT_EQ(Phase(3, 2, 4) * Phase::omega(3), Phase(3, 2, 7));
}

TEST(phase, pow_examples) {
    EXPECT_TRUE(Phase::omega(3).pow(3).is_one());
    EXPECT_EQ(Phase(3, 2, 1).pow(3), Phase::omega(3));
    Phase inv = Phase::omega(5).pow(-1);
    EXPECT_EQ(inv.level(), 1);
    EXPECT_EQ(inv.num(), 4);
}

TEST(phase, as_omega_power) {
    EXPECT_EQ(Phase::one(3).as_omega_power(), 0);
    EXPECT_EQ(Phase(3, 1, 2).as_omega_power(), 2);
    EXPECT_FALSE(Phase(3, 2, 1).as_omega_power().has_value());
}

TEST(phase, group_laws_exhaustive) {
    for (int64_t p : {2, 3, 5}) {
        int L = p == 5 ? 2 : 3;
        int64_t n = 1;
        for (int i = 0; i < L; i++) {
            n *= p;
        }
        for (int64_t x = 0; x < n; x++) {
            Phase a(p, L, x);
            EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_TRUE(a.pow(n).is_one());
            for (int64_t y = 0; y < n; y += 3) {
                Phase b(p, L, y);
                EXPECT_EQ(a * b, b * a);
                EXPECT_EQ(a * b, Phase(p, L, x + y));
                Phase c(p, L, x * y + 1);
                EXPECT_EQ((a * b) * c, a * (b * c));
            }
        }
    }
}

TEST(phase, canonicalization_idempotent) {
    for (int64_t e = -30; e < 30; e++) {
        Phase a(3, 3, e);
        Phase again(a.p(), a.level(), a.num());
        EXPECT_EQ(a, again);
        EXPECT_EQ(a.num_at_level(3), ((e % 27) + 27) % 27);
    }
}

TEST(phase, str) {
    EXPECT_EQ(Phase::one(3).str(), "1");
    EXPECT_EQ(Phase::omega(3).str(), "w");
    EXPECT_EQ(Phase::omega(3, 2).str(), "w^2");
    EXPECT_EQ(Phase(3, 2, 4).str(), "exp(2pi i 4/9)");
}
