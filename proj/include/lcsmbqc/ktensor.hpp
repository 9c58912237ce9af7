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

#include "lcsmbqc/kgroup.hpp"

namespace lcsmbqc {

/// global * (M_1 (x) ... (x) M_n) in K^{(x) n}.
///
/// Per-site scalars can move between sites and the global phase, so equality compares the
/// normal form in which every site table is 1 at q = 0.
struct TensorElement {
    Phase global;
    std::vector<KElement> sites;

    /// Throws std::invalid_argument if there are no sites or sites disagree on p or m.
    TensorElement(Phase global, std::vector<KElement> sites);

    static TensorElement identity(int64_t p, int m, size_t n);
    /// omega^c times the identity on n sites.
    static TensorElement scalar(int64_t p, int m, size_t n, int64_t c);
    /// One non-trivial site at position i.
    static TensorElement local(size_t n, size_t i, const KElement &M);

    int64_t p() const {
        return global.p();
    }
    int m() const {
        return sites[0].m;
    }
    size_t n() const {
        return sites.size();
    }

    bool is_identity() const;
    /// The scalar value when every site is a constant diagonal.
    std::optional<Phase> as_scalar() const;
    bool operator==(const TensorElement &other) const;
    std::string str() const;
};

struct TensorNormalForm {
    Phase global;
    std::vector<PhaseFunction> xi;
    std::vector<int64_t> b;
    bool operator==(const TensorNormalForm &other) const = default;
};

TensorNormalForm t_normal_form(const TensorElement &E);

TensorElement t_mul(const TensorElement &E, const TensorElement &F);
TensorElement t_inv(const TensorElement &E);
TensorElement t_pow(const TensorElement &E, int64_t n);
/// E F E^-1 F^-1 (the global phases cancel).
TensorElement t_commutator(const TensorElement &E, const TensorElement &F);
/// The commutator's scalar value, if it is scalar.
std::optional<Phase> t_commutator_scalar(const TensorElement &E, const TensorElement &F);
/// c with [E, F] = omega^c, or nullopt (non-scalar, or scalar outside the omega-powers).
std::optional<int64_t> t_commutator_exponent(const TensorElement &E, const TensorElement &F);
bool t_commute(const TensorElement &E, const TensorElement &F);

/// E^p == 1, computed from per-site p-th powers.
bool t_is_p_torsion(const TensorElement &E);
/// Digit form: b = 0 sites have no level >= 2 coefficients beyond the constant, and the
/// level-2 constants of those sites plus the global's level-2 digit sum to 0 mod p.
bool t_is_p_torsion_structural(const TensorElement &E);

struct SymplecticVector {
    std::vector<int64_t> fbar;
    std::vector<int64_t> bbar;
    bool operator==(const SymplecticVector &other) const = default;
};

/// Z-part from the linear level-1 coefficient. A site with b != 0 is first normalized to
/// shift 1 via M^{b^-1} = (xi0, 1), and contributes b * theta_{1,1}(xi0).
SymplecticVector t_symplectic_vector(const TensorElement &E);
/// Z-part taken directly as theta_{1,1} of every site table.
SymplecticVector t_symplectic_vector_literal(const TensorElement &E);
/// fbar . bbar' - fbar' . bbar mod p.
int64_t symplectic_form(const SymplecticVector &v, const SymplecticVector &w, int64_t p);
bool is_isotropic(const std::vector<SymplecticVector> &vs, int64_t p);

}  // namespace lcsmbqc
