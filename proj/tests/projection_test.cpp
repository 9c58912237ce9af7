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


#include "lcsmbqc/projection.hpp"

#include <gtest/gtest.h>

#include "dense_oracle.hpp"

using namespace lcsmbqc;

namespace {

HWElement hw1(int64_t p, int64_t c, int64_t a, int64_t b) {
    return HWElement(p, Phase::omega(p, c), {a}, {b});
}

KElement diag9(std::vector<int64_t> nums, int64_t b = 0) {
    std::vector<Phase> v;
    for (auto n : nums) {
        v.emplace_back(3, 2, n);
    }
    return KElement(PhaseFunction(3, v), b, 2);
}

std::vector<HWElement> all_hw(int64_t p, size_t n) {
    std::vector<HWElement> out;
    int64_t total = 1;
    for (size_t i = 0; i < 2 * n + 1; i++) {
        total *= p;
    }
    for (int64_t idx = 0; idx < total; idx++) {
        int64_t t = idx;
        int64_t c = t % p;
        t /= p;
        std::vector<int64_t> a(n), b(n);
        for (size_t i = 0; i < n; i++) {
            a[i] = t % p;
            t /= p;
            b[i] = t % p;
            t /= p;
        }
        out.emplace_back(p, Phase::omega(p, c), a, b);
    }
    return out;
}

}  // namespace

TEST(hw, defining_relation) {
    auto Z = hw1(3, 0, 1, 0), X = hw1(3, 0, 0, 1);
    auto zx = hw_mul(Z, X), xz = hw_mul(X, Z);
    EXPECT_EQ(zx, hw_mul(hw1(3, 1, 0, 0), xz));
    EXPECT_EQ(hw_commutator(Z, X), 1);
    EXPECT_TRUE(hw_pow(zx, 3).is_identity());
    auto Z2 = hw1(2, 0, 1, 0), X2 = hw1(2, 0, 0, 1);
    EXPECT_EQ(hw_pow(hw_mul(Z2, X2), 2), hw1(2, 1, 0, 0));
}

TEST(hw, matches_dense_oracle) {
    for (int64_t p : {2, 3}) {
        auto all = all_hw(p, 1);
        for (const auto &h : all) {
            auto dh = oracle::from_tensor(hw_to_tensor(h, 2));
            for (const auto &g : all) {
                auto dg = oracle::from_tensor(hw_to_tensor(g, 2));
                ASSERT_EQ(oracle::from_tensor(hw_to_tensor(hw_mul(h, g), 2)), oracle::mul(dh, dg));
            }
            ASSERT_EQ(oracle::from_tensor(hw_to_tensor(hw_inv(h), 2)), oracle::inverse(dh));
            auto acc = oracle::identity(p, kDefaultMaxLevel, static_cast<size_t>(p));
            for (int n = 0; n < 7; n++) {
                ASSERT_EQ(oracle::from_tensor(hw_to_tensor(hw_pow(h, n), 2)), acc);
                acc = oracle::mul(acc, dh);
            }
        }
    }
}

TEST(hw, commutator_consistent_with_symplectic_form) {
    for (const auto &h : all_hw(3, 2)) {
        for (const auto &g : all_hw(3, 2)) {
            auto th = hw_to_tensor(h, 1), tg = hw_to_tensor(g, 1);
            ASSERT_EQ(hw_commutator(h, g), t_commutator_exponent(th, tg));
            ASSERT_EQ(hw_commutator(h, g), symplectic_form(t_symplectic_vector(th), t_symplectic_vector(tg), 3));
        }
    }
}

TEST(projection, R_and_P_examples) {
    int64_t lin[] = {0, 1}, aff[] = {1, 2}, sq[] = {0, 0, 1};
    EXPECT_EQ(R_map(PhaseFunction::identity(3), 2), (HWLocal{Phase::one(3), 0, 0}));
    EXPECT_EQ(R_map(PhaseFunction::omega_poly(3, lin), 2), (HWLocal{Phase::one(3), 1, 0}));
    auto cube_root = PhaseFunction::constant(3, Phase(3, 2, 1));
    EXPECT_EQ(R_map(cube_root, 2, PhiVariant::kProof).scalar, Phase(3, 2, 1));
    EXPECT_EQ(R_map(cube_root, 2, PhiVariant::kDisplayed).scalar, Phase::omega(3));
    EXPECT_THROW(R_map(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 2), Phase(3, 2, 6)}), 2), std::invalid_argument);

    EXPECT_EQ(P_map(PhaseFunction::identity(3), 2), (HWLocal{Phase::one(3), 0, 0}));
    EXPECT_EQ(P_map(PhaseFunction::omega_poly(3, aff), 2), (HWLocal{Phase::omega(3), 2, 0}));
    EXPECT_EQ(P_map(PhaseFunction::omega_poly(3, sq), 2), (HWLocal{Phase::one(3), 0, 0}));
}

TEST(projection, phi_local_examples) {
    EXPECT_EQ(phi_local(KElement::X(3, 2)), (HWLocal{Phase::one(3), 0, 1}));
    int64_t lin[] = {0, 1};
    KElement zx(PhaseFunction::omega_poly(3, lin), 1, 2);
    EXPECT_EQ(phi_local(zx), (HWLocal{Phase::one(3), 1, 1}));

    // (w^{q^2}, 2): w^{q^2} has det w^2, so shift it by a constant that restores det 1.
    KElement M = diag9({1, 4, 4}, 2);
    auto h = phi_local(M);
    EXPECT_EQ(h.b, 2);
    HWElement img(3, h.scalar, {h.a}, {h.b});
    EXPECT_TRUE(hw_pow(img, 3).is_identity());
    auto M2 = k_pow(M, 2);
    auto h2 = phi_local(M2);
    EXPECT_EQ(HWElement(3, h2.scalar, {h2.a}, {h2.b}), hw_pow(img, 2));

    EXPECT_THROW(phi_local(KElement::X(2, 1)), std::invalid_argument);
    EXPECT_THROW(phi_local(diag9({1, 4, 4})), std::invalid_argument);
}

TEST(projection, phi_examples) {
    auto X = KElement::X(3, 2);
    TensorElement xxx(Phase::one(3), {X, X, X});
    EXPECT_EQ(phi(xxx), HWElement(3, Phase::one(3), {0, 0, 0}, {1, 1, 1}));
    auto w = TensorElement::scalar(3, 2, 2, 1);
    EXPECT_EQ(phi(w), HWElement(3, Phase::omega(3), {0, 0}, {0, 0}));
    EXPECT_THROW(phi(TensorElement(Phase::one(3), {diag9({1, 4, 4}), diag9({1, 4, 4})})), std::invalid_argument);
}

TEST(projection, remark_pair_separates_the_variants) {
    TensorElement E(Phase::one(3), {diag9({1, 4, 4}), diag9({2, 8, 8})});
    ASSERT_TRUE(t_is_p_torsion(E));
    auto E2 = t_mul(E, E);

    auto naive1 = phi(E, PhiVariant::kNaive), naive2 = phi(E2, PhiVariant::kNaive);
    auto discrepancy = hw_mul(naive2, hw_inv(hw_mul(naive1, naive1)));
    EXPECT_EQ(discrepancy, HWElement(3, Phase::omega(3), {0, 0}, {0, 0}));

    auto disp1 = phi(E, PhiVariant::kDisplayed), disp2 = phi(E2, PhiVariant::kDisplayed);
    EXPECT_FALSE(disp2 == hw_mul(disp1, disp1));

    auto prf1 = phi(E), prf2 = phi(E2);
    EXPECT_EQ(prf2, hw_mul(prf1, prf1));
    EXPECT_TRUE(prf1.c.as_omega_power().has_value());
}

TEST(projection, homomorphism_exhaustive_single_site) {
    auto all = k_enumerate(3, 2);
    std::vector<TensorElement> tors;
    for (const auto &M : all) {
        TensorElement E = TensorElement::local(1, 0, M);
        if (t_is_p_torsion(E)) {
            tors.push_back(E);
        }
    }
    for (const auto &E : tors) {
        auto pE = phi(E);
        ASSERT_TRUE(pE.c.as_omega_power().has_value());
        ASSERT_TRUE(hw_pow(pE, 3).is_identity());
        ASSERT_EQ(oracle::from_tensor(hw_to_tensor(pE, 2)).dim, 3u);
        for (const auto &F : tors) {
            auto c = t_commutator_exponent(E, F);
            if (!c) {
                continue;
            }
            ASSERT_EQ(hw_commutator(pE, phi(F)), *c);
            if (*c == 0) {
                ASSERT_EQ(phi(t_mul(E, F)), hw_mul(pE, phi(F))) << E.str() << " | " << F.str();
            }
        }
    }
}

TEST(projection, nu_sign_fixed_by_brute_force) {
    // Additivity over commuting pairs decides the sign of the quadratic term.
    for (size_t n : {1u, 2u}) {
        auto all = all_hw(3, n);
        bool plus_ok = true, minus_ok = true;
        for (const auto &h : all) {
            for (const auto &g : all) {
                if (hw_commutator(h, g) != 0) {
                    continue;
                }
                auto hg = hw_mul(h, g);
                plus_ok = plus_ok && value_map_nu(hg) == (value_map_nu(h) + value_map_nu(g)) % 3;
                minus_ok = minus_ok && value_map_nu_minus(hg) == (value_map_nu_minus(h) + value_map_nu_minus(g)) % 3;
            }
        }
        EXPECT_TRUE(plus_ok);
        EXPECT_FALSE(minus_ok);
    }
    EXPECT_EQ(value_map_nu(HWElement::identity(3, 2)), 0);
    EXPECT_EQ(value_map_nu(HWElement(5, Phase::omega(5, 3), {0}, {0})), 3);
    EXPECT_THROW(value_map_nu(HWElement(3, Phase(3, 2, 1), {0}, {0})), std::invalid_argument);
    EXPECT_THROW(value_map_nu(HWElement(2, Phase::one(2), {0}, {0})), std::invalid_argument);
}

TEST(projection, even_prime_counterexample) {
    auto rep = even_prime_counterexample();
    EXPECT_TRUE(rep.M_squared_identity);
    EXPECT_TRUE(rep.N_squared_identity);
    EXPECT_TRUE(rep.commute);
    EXPECT_TRUE(rep.MN_is_minus_one);
    EXPECT_EQ(rep.M_matrix, (std::vector<std::vector<std::string>>{{"0", "exp(2pi i 3/4)"}, {"exp(2pi i 1/4)", "0"}}));
    EXPECT_EQ(rep.phi_M_matrix, (std::vector<std::vector<std::string>>{{"0", "w"}, {"1", "0"}}));
    EXPECT_EQ(rep.phi_MN, HWElement(2, Phase::omega(2), {0}, {0}));
    EXPECT_TRUE(rep.phi_M_phi_N.is_identity());
    EXPECT_TRUE(rep.homomorphism_fails);
}
