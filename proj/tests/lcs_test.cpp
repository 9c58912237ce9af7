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


#include "lcsmbqc/lcs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lcsmbqc;

namespace {

// Exhaustive search over Z_d^n.
std::optional<std::vector<int64_t>> brute_force(const LCS &s) {
    size_t n = s.cols();
    std::vector<int64_t> x(n, 0);
    while (true) {
        if (check_classical(s, x)) {
            return x;
        }
        size_t k = 0;
        while (k < n && ++x[k] == s.d) {
            x[k++] = 0;
        }
        if (k == n) {
            return std::nullopt;
        }
    }
}

int64_t count_solutions(const LCS &s) {
    size_t n = s.cols();
    std::vector<int64_t> x(n, 0);
    int64_t count = 0;
    while (true) {
        count += check_classical(s, x);
        size_t k = 0;
        while (k < n && ++x[k] == s.d) {
            x[k++] = 0;
        }
        if (k == n) {
            return count;
        }
    }
}

}  // namespace

TEST(lcs, construction) {
    EXPECT_THROW(LCS(2, {{1, 0}}, {0, 1}), std::invalid_argument);
    EXPECT_THROW(LCS(2, {{1, 0}, {1}}, {0, 1}), std::invalid_argument);
    LCS s(3, {{4, -1}}, {5});
    EXPECT_EQ(s.A[0], (std::vector<int64_t>{1, 2}));
    EXPECT_EQ(s.b[0], 2);
    EXPECT_THROW(LCS(3, {}, {}), std::invalid_argument);
    EXPECT_THROW(LCS(3, {{1, 2}}, {0}, 3), std::invalid_argument);
    LCS empty(3, {}, {}, 4);
    EXPECT_EQ(empty.cols(), 4u);
    EXPECT_EQ(solve_classical(empty), (std::vector<int64_t>{0, 0, 0, 0}));
}

TEST(lcs, solve_examples) {
    auto fx = mermin_fixtures();
    EXPECT_FALSE(solve_classical(fx.square).has_value());
    EXPECT_EQ(count_solutions(fx.square), 0);
    LCS id(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {3, 1, 4});
    EXPECT_EQ(solve_classical(id), (std::vector<int64_t>{3, 1, 4}));
    EXPECT_FALSE(solve_classical(fx.star).has_value());
    EXPECT_EQ(count_solutions(fx.star), 0);
    EXPECT_THROW(solve_classical(LCS(4, {{1}}, {1})), std::invalid_argument);
}

TEST(lcs, check_examples) {
    LCS s(3, {{1, 1}, {1, 2}}, {1, 2});
    auto x = solve_classical(s);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(check_classical(s, *x));
    EXPECT_FALSE(check_classical(s, {0, 0}));
    EXPECT_THROW(check_classical(s, {0}), std::invalid_argument);
    // Composite moduli can still be checked.
    EXPECT_TRUE(check_classical(LCS(4, {{2}}, {2}), {1}));
}

TEST(lcs, solver_agrees_with_brute_force) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; trial++) {
        int64_t d = trial % 2 ? 3 : 2;
        size_t n = 1 + rng() % (d == 2 ? 9 : 7);
        size_t m = 1 + rng() % 10;
        std::vector<std::vector<int64_t>> A(m, std::vector<int64_t>(n));
        std::vector<int64_t> b(m);
        for (auto &row : A) {
            for (auto &v : row) {
                v = rng() % d;
            }
        }
        for (auto &v : b) {
            v = rng() % d;
        }
        LCS s(d, A, b);
        auto fast = solve_classical(s);
        auto slow = brute_force(s);
        ASSERT_EQ(fast.has_value(), slow.has_value());
        if (fast) {
            ASSERT_TRUE(check_classical(s, *fast));
        }
    }
}

TEST(lcs, mermin_square_quantum_solution) {
    auto fx = mermin_fixtures();
    auto rep = check_solution_conditions(fx.square, fx.square_assignment);
    EXPECT_TRUE(rep.torsion);
    EXPECT_TRUE(rep.commutativity);
    EXPECT_TRUE(rep.constraints);
    EXPECT_TRUE(rep.quantum_solution());
    EXPECT_TRUE(rep.failures.empty());
    EXPECT_THROW(reduce_to_classical(fx.square, fx.square_assignment), std::invalid_argument);
}

TEST(lcs, mermin_square_row_major_reading_fails) {
    auto fx = mermin_fixtures();
    auto &g = fx.square_assignment.g;
    // Reading the same nine operators row-major swaps x2 <-> x4, x3 <-> x7, x6 <-> x8.
    std::vector<TensorElement> row_major{g[0], g[3], g[6], g[1], g[4], g[7], g[2], g[5], g[8]};
    auto rep = check_solution_conditions(fx.square, GeneratorAssignment(row_major));
    EXPECT_FALSE(rep.constraints);
}

TEST(lcs, scalar_lift_is_a_quantum_solution) {
    LCS s(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 2}}, {1, 2, 2});
    auto x = solve_classical(s);
    ASSERT_TRUE(x.has_value());
    auto g = classical_lift(*x, 3, 1, 2);
    auto rep = check_solution_conditions(s, g);
    EXPECT_TRUE(rep.quantum_solution());
    auto red = reduce_to_classical(s, g);
    EXPECT_EQ(red.x, *x);
    EXPECT_TRUE(red.classical_ok);
    EXPECT_TRUE(red.image_conditions.all());
}

TEST(lcs, commute_on_ghz_examples) {
    auto X = KElement::X(3, 2), Z = KElement::Z(3, 2), I = KElement::identity(3, 2);
    TensorElement xx(Phase::one(3), {X, X, X});
    EXPECT_TRUE(commute_on_ghz(xx, xx));
    EXPECT_FALSE(commute_on_ghz(TensorElement(Phase::one(3), {X, I}), TensorElement(Phase::one(3), {Z, I})));
    auto spec = qudit_star_spec(3);
    auto E = mbqc_operator(spec, {1, 0}), F = mbqc_operator(spec, {0, 1});
    EXPECT_TRUE(commute_on_ghz(E, F));
    EXPECT_FALSE(t_commute(E, F));
}

TEST(lcs, from_mbqc) {
    auto qubit = qubit_star_spec();
    auto t = output_table(qubit);
    auto L = lcs_from_mbqc(qubit, t);
    auto fx = mermin_fixtures();
    EXPECT_EQ(L.A, fx.star.A);
    EXPECT_EQ(L.b, (std::vector<int64_t>{0, 1, 1, 1}));
    EXPECT_FALSE(solve_classical(L).has_value());

    auto qudit = qudit_star_spec(3);
    auto L3 = lcs_from_mbqc(qudit, output_table(qudit));
    EXPECT_EQ(L3.rows(), 9u);
    EXPECT_EQ(L3.A[0], (std::vector<int64_t>{0, 0, 0}));
    EXPECT_EQ(L3.b[0], 0);
    EXPECT_FALSE(solve_classical(L3).has_value());

    MbqcSpec flat{3, 2, 2, {MbqcSite{star_base(3), {0, 0}, 1}, MbqcSite{star_base(3), {0, 0}, 2}}};
    auto Lf = lcs_from_mbqc(flat, output_table(flat));
    for (const auto &row : Lf.A) {
        EXPECT_EQ(row, Lf.A[0]);
    }
}

TEST(lcs, relation_lcs_and_reduction) {
    // Commuting torsion family inside <w, (w^q, 1)> on two sites plus T_(3) on a third.
    int64_t lin[] = {0, 1};
    KElement zx(PhaseFunction::omega_poly(3, lin), 1, 2);
    auto Z = KElement::Z(3, 2), I = KElement::identity(3, 2);
    std::vector<TensorElement> gens{
        TensorElement(Phase::one(3), {zx, I, Z}),
        TensorElement(Phase::omega(3), {k_pow(zx, 2), I, I}),
        TensorElement(Phase::one(3), {I, I, k_pow(Z, 2)}),
        TensorElement::scalar(3, 2, 3, 2),
    };
    auto s = relation_lcs(gens);
    EXPECT_GT(s.rows(), 0u);
    GeneratorAssignment g(gens);
    auto rep = check_solution_conditions(s, g);
    EXPECT_TRUE(rep.quantum_solution());
    auto red = reduce_to_classical(s, g);
    EXPECT_TRUE(red.classical_ok);
    EXPECT_TRUE(red.image_conditions.all());
}

TEST(lcs, qudit_star_family_dichotomy) {
    auto rep = mbqc_family_report(qudit_star_spec(3));
    EXPECT_EQ(rep.rows, 9u);
    EXPECT_TRUE(rep.torsion);
    EXPECT_TRUE(rep.ghz_constraints);
    EXPECT_FALSE(rep.operator_constraints);
    EXPECT_TRUE(rep.all_commute_on_ghz);
    EXPECT_FALSE(rep.all_commute_exactly);
    ASSERT_TRUE(rep.noncommuting_pair.has_value());
}

TEST(lcs, solution_report_flags_failures) {
    LCS s(3, {{1, 1}}, {0});
    auto X = KElement::X(3, 1), Z = KElement::Z(3, 1);
    GeneratorAssignment g({TensorElement::local(1, 0, X), TensorElement::local(1, 0, Z)});
    auto rep = check_solution_conditions(s, g);
    EXPECT_TRUE(rep.torsion);
    EXPECT_FALSE(rep.commutativity);
    EXPECT_FALSE(rep.constraints);
    EXPECT_FALSE(rep.failures.empty());
    EXPECT_THROW(reduce_to_classical(s, g), std::invalid_argument);
}
