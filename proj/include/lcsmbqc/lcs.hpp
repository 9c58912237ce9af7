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


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcsmbqc/mbqc.hpp"
#include "lcsmbqc/projection.hpp"

namespace lcsmbqc {

/// A x = b mod d.
struct LCS {
    int64_t d;
    std::vector<std::vector<int64_t>> A;
    std::vector<int64_t> b;
    /// Number of variables; kept separately so a system with no equations still has a width.
    size_t n_vars;

    /// Reduces entries mod d. Throws std::invalid_argument on ragged rows, d < 2, or a width that
    /// disagrees with the rows. Without rows, `n_vars` must be given.
    LCS(int64_t d, std::vector<std::vector<int64_t>> A, std::vector<int64_t> b,
        std::optional<size_t> n_vars = std::nullopt);

    size_t rows() const {
        return A.size();
    }
    size_t cols() const {
        return n_vars;
    }
    bool operator==(const LCS &other) const = default;
};

/// Gaussian elimination over Z_d. Returns nullopt when inconsistent.
/// Throws std::invalid_argument when d is not prime.
std::optional<std::vector<int64_t>> solve_classical(const LCS &s);
bool check_classical(const LCS &s, const std::vector<int64_t> &x);

/// Generator k maps to g[k]; J defaults to w times the identity.
struct GeneratorAssignment {
    std::vector<TensorElement> g;
    TensorElement J;

    explicit GeneratorAssignment(std::vector<TensorElement> g);
    GeneratorAssignment(std::vector<TensorElement> g, TensorElement J);
};

struct SolutionReport {
    bool torsion = true;
    bool commutativity = true;
    /// Row products equal J^{b_i} as operators.
    bool constraints = true;
    /// Row products act as w^{b_i} on the GHZ state.
    bool constraints_on_ghz = true;
    std::vector<std::string> failures;

    bool operator_solution() const {
        return torsion && constraints;
    }
    bool quantum_solution() const {
        return torsion && commutativity && constraints;
    }
};

/// Row products are taken in ascending generator order.
SolutionReport check_solution_conditions(const LCS &s, const GeneratorAssignment &g);

/// (E F) psi == (F E) psi for the GHZ state psi.
bool commute_on_ghz(const TensorElement &E, const TensorElement &F);

/// One row per input (lexicographic), L_{i,k} = l_k(i), right-hand side o(i).
/// Throws std::invalid_argument if some row has no omega-power output.
LCS lcs_from_mbqc(const MbqcSpec &spec, const OutputTable &t);

struct HWConditions {
    bool torsion = true;
    bool commutativity = true;
    bool constraints = true;
    bool all() const {
        return torsion && commutativity && constraints;
    }
};

/// Def. 2 conditions for an assignment in H(Z_p)^{(x) n} with J = w.
HWConditions check_hw_conditions(const LCS &s, const std::vector<HWElement> &h);

struct ReductionReport {
    std::vector<int64_t> x;
    std::vector<HWElement> images;
    HWConditions image_conditions;
    bool classical_ok = false;
};

/// x_k = nu(phi(g_k)). Throws std::invalid_argument for p = 2 or when g is not a quantum solution.
ReductionReport reduce_to_classical(const LCS &s, const GeneratorAssignment &g);

/// g_k = w^{x_k} times the identity on n sites.
GeneratorAssignment classical_lift(const std::vector<int64_t> &x, int64_t p, int m, size_t n_sites);

/// Relations among commuting generators: every coefficient vector c whose ordered product
/// prod_k g_k^{c_k} is a power of w becomes a row (c, exponent). Zero vector excluded.
/// Throws BudgetExceeded if p^{gens} exceeds the budget.
LCS relation_lcs(const std::vector<TensorElement> &gens, int64_t budget = default_budget());

struct MerminFixtures {
    LCS square;
    GeneratorAssignment square_assignment;
    LCS star;
};

MerminFixtures mermin_fixtures();

/// Row operators E_i of an MBQC family checked against the Def. 2 conditions.
struct MbqcFamilyReport {
    size_t rows;
    bool torsion;
    /// E_i psi = w^{o(i)} psi for every row.
    bool ghz_constraints;
    /// E_i = w^{o(i)} as operators for every row.
    bool operator_constraints;
    bool all_commute_on_ghz;
    bool all_commute_exactly;
    /// First pair (in input order) that fails exact commutation.
    std::optional<std::pair<std::vector<int64_t>, std::vector<int64_t>>> noncommuting_pair;
};

MbqcFamilyReport mbqc_family_report(const MbqcSpec &spec);

}  // namespace lcsmbqc
