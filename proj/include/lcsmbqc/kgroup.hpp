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
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsmbqc/phase_fn.hpp"

namespace lcsmbqc {

/// Thrown when an enumeration would exceed the configured element budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int64_t kDefaultBudget = 10000000;

/// kDefaultBudget, or the value of the LCSMBQC_BUDGET environment variable when set.
int64_t default_budget();

/// S_xi X^b in K_Q(p) with Q = T_(p^m).
///
/// Construction checks det(xi) = 1 and that every value of xi is a p^m-th root of unity,
/// so invalid elements cannot be represented.
struct KElement {
    PhaseFunction xi;
    int64_t b;
    int m;

    KElement(PhaseFunction xi, int64_t b, int m);

    int64_t p() const {
        return xi.p;
    }
    bool is_identity() const;
    bool is_diagonal() const {
        return b == 0;
    }

    static KElement identity(int64_t p, int m);
    static KElement X(int64_t p, int m);
    /// (omega^q, 0).
    static KElement Z(int64_t p, int m);
    /// omega^c times the identity.
    static KElement scalar(int64_t p, int m, int64_t c);

    /// Equality ignores the level cap m.
    bool operator==(const KElement &other) const {
        return b == other.b && xi == other.xi;
    }
    /// Flat integer key (numerators at level m, then b) for hashing and ordering.
    std::vector<int64_t> key() const;
    std::string str() const;
};

KElement k_mul(const KElement &M, const KElement &N);
KElement k_inv(const KElement &M);
/// M^n via the closed form prod_{i<n} (i b).xi; negative n goes through k_inv.
KElement k_pow(const KElement &M, int64_t n);
/// M N M^-1 N^-1.
KElement k_commutator(const KElement &M, const KElement &N);
bool k_is_p_torsion(const KElement &M);
/// b != 0, or b = 0 with xi of level <= 1.
bool k_is_p_torsion_structural(const KElement &M);
/// The commutator's constant value if it is scalar (any level).
std::optional<Phase> k_commutator_scalar(const KElement &M, const KElement &N);
/// c with [M, N] = omega^c, or nullopt.
std::optional<int64_t> k_scalar_commutant(const KElement &M, const KElement &N);

struct CommutingPairCase {
    /// 1: both diagonal; 2: exactly one diagonal; 3: both off-diagonal.
    int which;
    int64_t c;
    /// Case 2: true when M is the diagonal one (roles swapped relative to the usual statement).
    bool swapped = false;
    /// Case 2: the diagonal element lies in T_(p); central when c = 0.
    bool diagonal_in_Tp = false;
    bool diagonal_central = false;
    /// Case 2: diagonal xi(q) = omega^{offset + slope q}.
    int64_t offset = 0;
    int64_t slope = 0;
    /// Case 3: omega^a N = (M S_chi)^y with chi(q) = omega^{cprime q}.
    int64_t a = 0;
    int64_t y = 0;
    int64_t cprime = 0;
};

/// Classifies a scalar-commuting pair and verifies the witnesses.
/// Throws std::invalid_argument if [M, N] is not an omega-power scalar or p = 2,
/// and std::logic_error if a witness fails to verify.
CommutingPairCase k_classify_commuting_pair(const KElement &M, const KElement &N);

/// Every element of K_{T_(p^m)}(p), ordered by b and then by the free table entries.
/// Throws BudgetExceeded when p^{m(p-1)+1} > budget.
std::vector<KElement> k_enumerate(int64_t p, int m, int64_t budget = default_budget());

/// All det-1 diagonal tables with values of level <= m.
std::vector<PhaseFunction> special_torus_tables(int64_t p, int m, int64_t budget = default_budget());

struct SubgroupReport {
    int64_t p;
    int m;
    int64_t group_order;
    int64_t torsion_count;
    std::vector<std::vector<KElement>> subgroups;
    /// "T_(p)", "<w, S_xi X^b>", or "unclassified".
    std::vector<std::string> kinds;
    std::vector<KElement> center;
    bool center_is_omega = false;
    bool intersections_are_center = false;
    bool torus_is_maximal = false;
    bool classification_ok = false;
};

/// Maximal p-torsion abelian subgroups of K_{T_(p^m)}(p): maximal commuting cliques among the
/// p-torsion elements, closed under multiplication and deduplicated.
SubgroupReport k_maximal_p_torsion_abelian(int64_t p, int m, int64_t budget = default_budget());

/// Closure of a generating set under k_mul.
std::vector<KElement> k_generate(const std::vector<KElement> &gens);

struct DihedralReport {
    int m;
    int64_t rotation_order;
    int64_t reflection_order;
    bool conjugation_inverts;
    int64_t generated_order;
    bool ok;
};

/// At p = 2: r = diag(e^{2 pi i/2^m}, e^{-2 pi i/2^m}) and s = X present D_{2^{m+1}}.
DihedralReport k_dihedral_check(int m);

}  // namespace lcsmbqc
