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


#include "lcsmbqc/kgroup.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.hpp"

using namespace lcsmbqc;

namespace {

PhaseFunction omega_poly(int64_t p, std::vector<int64_t> c) {
    return PhaseFunction::omega_poly(p, c);
}

KElement random_element(std::mt19937_64 &rng, const std::vector<KElement> &all) {
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST(kgroup, construction_validates_torus) {
    EXPECT_THROW(KElement(PhaseFunction::constant(3, Phase(3, 2, 1)), 0, 2), std::invalid_argument);
    EXPECT_THROW(KElement(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 1), Phase(3, 2, -2)}), 0, 1),
                 std::invalid_argument);
    EXPECT_NO_THROW(KElement(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 1), Phase(3, 2, -2)}), 0, 2));
    EXPECT_EQ(KElement(PhaseFunction::identity(3), 4, 1).b, 1);
}

TEST(kgroup, mul_examples) {
    auto X = KElement::X(3, 1), Z = KElement::Z(3, 1);
    EXPECT_EQ(k_mul(X, X), KElement(PhaseFunction::identity(3), 2, 1));
    EXPECT_EQ(k_mul(Z, X), KElement(omega_poly(3, {0, 1}), 1, 1));
    EXPECT_EQ(k_mul(X, Z), KElement(omega_poly(3, {-1, 1}), 1, 1));
    EXPECT_EQ(oracle::from_k(k_mul(X, Z)), oracle::mul(oracle::from_k(X), oracle::from_k(Z)));
    EXPECT_THROW(k_mul(X, KElement::X(3, 2)), std::invalid_argument);
}

TEST(kgroup, inverse_examples) {
    auto id = KElement::identity(3, 1);
    EXPECT_EQ(k_inv(id), id);
    EXPECT_EQ(k_inv(KElement::X(3, 1)), KElement(PhaseFunction::identity(3), 2, 1));
    KElement zx(omega_poly(3, {0, 1}), 1, 1);
    EXPECT_EQ(k_inv(zx), KElement(omega_poly(3, {-1, -1}), 2, 1));
    EXPECT_TRUE(k_mul(zx, k_inv(zx)).is_identity());
}

TEST(kgroup, pow_examples) {
    KElement zx(omega_poly(3, {0, 1}), 1, 1);
    EXPECT_TRUE(k_pow(zx, 0).is_identity());
    EXPECT_TRUE(k_pow(zx, 3).is_identity());
    // A det-1 diagonal with a genuine ninth root: w^{q^2} w^{1/3}; its cube is w.
    KElement deep(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 4), Phase(3, 2, 4)}), 0, 2);
    EXPECT_EQ(k_pow(deep, 3), KElement::scalar(3, 2, 1));
    EXPECT_EQ(k_pow(deep, -1), k_inv(deep));
}

TEST(kgroup, commutator_examples) {
    auto X = KElement::X(3, 1), Z = KElement::Z(3, 1);
    EXPECT_TRUE(k_commutator(X, X).is_identity());
    auto xz = k_commutator(X, Z);
    EXPECT_EQ(xz, KElement::scalar(3, 1, 2));
    auto dx = oracle::from_k(X), dz = oracle::from_k(Z);
    EXPECT_EQ(oracle::from_k(xz), oracle::mul(oracle::mul(dx, dz), oracle::mul(oracle::inverse(dx), oracle::inverse(dz))));
    EXPECT_TRUE(k_commutator(Z, KElement(omega_poly(3, {1, 2}), 0, 1)).is_identity());
}

TEST(kgroup, scalar_commutant_examples) {
    auto X = KElement::X(3, 2), Z = KElement::Z(3, 2);
    EXPECT_EQ(k_scalar_commutant(X, X), 0);
    EXPECT_EQ(k_scalar_commutant(X, Z), 2);
    KElement deep(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 1), Phase(3, 2, -2)}), 0, 2);
    auto comm = k_commutator(X, deep);
    EXPECT_FALSE(pf_constant_value(comm.xi).has_value());
    EXPECT_FALSE(k_scalar_commutant(X, deep).has_value());
}

TEST(kgroup, torsion_examples) {
    EXPECT_TRUE(k_is_p_torsion(KElement::X(3, 2)));
    KElement deep(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 4), Phase(3, 2, 4)}), 0, 2);
    EXPECT_FALSE(k_is_p_torsion(deep));
    EXPECT_FALSE(k_is_p_torsion_structural(deep));
    KElement zx(omega_poly(3, {0, 1}), 1, 2);
    EXPECT_TRUE(k_is_p_torsion(zx));
}

TEST(kgroup, classify_examples) {
    auto X = KElement::X(3, 1), Z = KElement::Z(3, 1);
    auto c1 = k_classify_commuting_pair(Z, k_pow(Z, 2));
    EXPECT_EQ(c1.which, 1);

    auto c2 = k_classify_commuting_pair(X, Z);
    EXPECT_EQ(c2.which, 2);
    EXPECT_EQ(c2.c, 2);
    EXPECT_TRUE(c2.diagonal_in_Tp);
    EXPECT_FALSE(c2.diagonal_central);

    KElement zx(omega_poly(3, {0, 1}), 1, 1);
    auto c3 = k_classify_commuting_pair(zx, k_pow(zx, 2));
    EXPECT_EQ(c3.which, 3);
    EXPECT_EQ(c3.c, 0);
    EXPECT_EQ(c3.y, 2);
    EXPECT_EQ(c3.a, 0);
    EXPECT_EQ(c3.cprime, 0);

    KElement deep(PhaseFunction(3, {Phase(3, 2, 1), Phase(3, 2, 1), Phase(3, 2, -2)}), 0, 2);
    EXPECT_THROW(k_classify_commuting_pair(KElement::X(3, 2), deep), std::invalid_argument);
    EXPECT_THROW(k_classify_commuting_pair(KElement::X(2, 1), KElement::X(2, 1)), std::invalid_argument);
}

TEST(kgroup, classify_every_scalar_commuting_pair_p3_m2) {
    auto all = k_enumerate(3, 2);
    int classified = 0;
    for (const auto &M : all) {
        for (const auto &N : all) {
            if (k_scalar_commutant(M, N)) {
                ASSERT_NO_THROW(k_classify_commuting_pair(M, N)) << M.str() << " " << N.str();
                classified++;
            }
        }
    }
    EXPECT_GT(classified, 0);
}

TEST(kgroup, enumerate_counts) {
    EXPECT_EQ(k_enumerate(3, 1).size(), 27u);
    EXPECT_EQ(k_enumerate(3, 2).size(), 243u);
    EXPECT_EQ(k_enumerate(2, 2).size(), 8u);
    EXPECT_THROW(k_enumerate(3, 2, 100), BudgetExceeded);
}

TEST(kgroup, group_axioms_and_oracle_agreement) {
    std::mt19937_64 rng(2024);
    for (int64_t p : {2, 3}) {
        auto all = k_enumerate(p, 2);
        for (int trial = 0; trial < 500; trial++) {
            auto A = random_element(rng, all), B = random_element(rng, all), C = random_element(rng, all);
            EXPECT_EQ(k_mul(k_mul(A, B), C), k_mul(A, k_mul(B, C)));
            EXPECT_TRUE(k_mul(A, k_inv(A)).is_identity());
            EXPECT_TRUE(k_mul(k_inv(A), A).is_identity());
            auto dA = oracle::from_k(A), dB = oracle::from_k(B);
            EXPECT_EQ(oracle::from_k(k_mul(A, B)), oracle::mul(dA, dB));
            EXPECT_EQ(oracle::from_k(k_inv(A)), oracle::inverse(dA));
            EXPECT_EQ(oracle::from_k(k_commutator(A, B)),
                      oracle::mul(oracle::mul(dA, dB), oracle::mul(oracle::inverse(dA), oracle::inverse(dB))));
            int n = static_cast<int>(trial % 10);
            auto dp = oracle::identity(p, kDefaultMaxLevel, static_cast<size_t>(p));
            for (int i = 0; i < n; i++) {
                dp = oracle::mul(dp, dA);
            }
            EXPECT_EQ(oracle::from_k(k_pow(A, n)), dp);
        }
    }
}

TEST(kgroup, lemma2_structural_matches_direct) {
    for (auto [p, m] : {std::pair<int64_t, int>{3, 2}, {3, 1}, {2, 2}, {5, 1}}) {
        for (const auto &M : k_enumerate(p, m)) {
            ASSERT_EQ(k_is_p_torsion(M), k_is_p_torsion_structural(M)) << M.str();
        }
    }
}

TEST(kgroup, subgroups_p3_m2) {
    auto rep = k_maximal_p_torsion_abelian(3, 2);
    EXPECT_EQ(rep.group_order, 243);
    EXPECT_EQ(rep.torsion_count, 171);
    EXPECT_EQ(rep.subgroups.size(), 28u);
    EXPECT_TRUE(rep.torus_is_maximal);
    EXPECT_TRUE(rep.center_is_omega);
    EXPECT_TRUE(rep.intersections_are_center);
    EXPECT_TRUE(rep.classification_ok);
    int tori = 0;
    for (size_t i = 0; i < rep.subgroups.size(); i++) {
        EXPECT_EQ(rep.subgroups[i].size(), 9u);
        tori += rep.kinds[i] == "T_(p)";
    }
    EXPECT_EQ(tori, 1);
}

TEST(kgroup, subgroups_p3_m1) {
    auto rep = k_maximal_p_torsion_abelian(3, 1);
    EXPECT_EQ(rep.subgroups.size(), 4u);
    EXPECT_TRUE(rep.classification_ok);
}

TEST(kgroup, subgroups_even_prime) {
    for (int m : {2, 3}) {
        auto rep = k_maximal_p_torsion_abelian(2, m);
        EXPECT_FALSE(rep.torus_is_maximal);
        EXPECT_TRUE(rep.center_is_omega);
        EXPECT_TRUE(rep.classification_ok) << "m=" << m;
        for (const auto &kind : rep.kinds) {
            EXPECT_EQ(kind, "<w, S_xi X^b>");
        }
    }
}

TEST(kgroup, dihedral) {
    for (int m : {1, 2, 3}) {
        auto rep = k_dihedral_check(m);
        EXPECT_TRUE(rep.ok) << "m=" << m;
        EXPECT_EQ(rep.generated_order, int64_t{2} << m);
    }
}
