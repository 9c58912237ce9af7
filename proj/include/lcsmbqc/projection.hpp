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
#include <string>
#include <vector>

#include "lcsmbqc/ktensor.hpp"

namespace lcsmbqc {

/// c (Z^{a_1} X^{b_1} (x) ... (x) Z^{a_n} X^{b_n}) in H(Z_p)^{(x) n}, with Z|q> = w^q |q>
/// and X|q> = |q+1>, so that Z X = w X Z.
struct HWElement {
    int64_t p;
    Phase c;
    std::vector<int64_t> a;
    std::vector<int64_t> b;

    HWElement(int64_t p, Phase c, std::vector<int64_t> a, std::vector<int64_t> b);
    static HWElement identity(int64_t p, size_t n);

    size_t n() const {
        return a.size();
    }
    bool is_identity() const;
    bool operator==(const HWElement &other) const = default;
    std::string str() const;
};

HWElement hw_mul(const HWElement &h, const HWElement &g);
HWElement hw_inv(const HWElement &h);
HWElement hw_pow(const HWElement &h, int64_t n);
/// Exponent k with h g h^-1 g^-1 = w^k: a.b' - a'.b mod p.
int64_t hw_commutator(const HWElement &h, const HWElement &g);
/// The same element as a TensorElement: site i is (w^{a_i q}, b_i), global c. At p = 2 a
/// Z factor is stored as i diag(-i, i) to stay in the special torus, so m >= 2 is needed.
TensorElement hw_to_tensor(const HWElement &h, int m);

enum class PhiVariant {
    /// Level-2 constant enters as the p-th root of w: R(xi) = w^{t10 + t11 q} (p-th root of w)^{t20}.
    kProof,
    /// Level-2 constant enters as a power of w: R(xi) = w^{t10 + t20 + t11 q}.
    kDisplayed,
    /// P(xi) = w^{t10 + t11 q} on every site, diagonal or not.
    kNaive,
};

const char *phi_variant_name(PhiVariant v);
/// Parses "proof", "displayed" or "naive"; throws std::invalid_argument otherwise.
PhiVariant parse_phi_variant(const std::string &name);

/// A single-site image: scalar * Z^a X^b.
struct HWLocal {
    Phase scalar;
    int64_t a;
    int64_t b;
    bool operator==(const HWLocal &other) const = default;
};

/// R(xi) for a diagonal torsion-relevant table (no level >= 2 coefficients except t20).
/// Throws std::invalid_argument when xi has out-of-scope coefficients.
HWLocal R_map(const PhaseFunction &xi, int m, PhiVariant variant = PhiVariant::kProof);
/// The level-1 affine part w^{t10 + t11 q}.
HWLocal P_map(const PhaseFunction &xi, int m);

/// phi_1 on one p-torsion site. Throws std::invalid_argument for p = 2 or non-torsion input.
HWLocal phi_local(const KElement &M, PhiVariant variant = PhiVariant::kProof);
/// phi on a p-torsion tensor; per-site scalars and the global multiply into c.
/// Throws std::invalid_argument for p = 2 or non-torsion input.
HWElement phi(const TensorElement &E, PhiVariant variant = PhiVariant::kProof);

/// nu(w^c Z^a X^b) = c + 2^{-1} sum_i a_i b_i mod p.
/// Throws std::invalid_argument for p = 2 or a global that is not a power of w.
int64_t value_map_nu(const HWElement &h);
/// The same formula with the opposite sign on the quadratic term (kept for the sign oracle).
int64_t value_map_nu_minus(const HWElement &h);

struct EvenPrimeReport {
    KElement M;
    KElement N;
    bool M_squared_identity;
    bool N_squared_identity;
    bool commute;
    bool MN_is_minus_one;
    HWElement phi_M;
    HWElement phi_N;
    HWElement phi_MN;
    HWElement phi_M_phi_N;
    bool homomorphism_fails;
    /// Dense 2x2 forms of M and phi(M), row by row ("0" for zero entries).
    std::vector<std::vector<std::string>> M_matrix;
    std::vector<std::vector<std::string>> phi_M_matrix;
};

/// The qubit pair M = S_{xi1} X, N = S_{xi2} X with xi1(q) = (-1)^{1+q} i, xi2(q) = (-1)^q i,
/// pushed through the level-1 map at p = 2.
EvenPrimeReport even_prime_counterexample();

/// Row-major dense form of a single-site element; entries are Phase strings or "0".
std::vector<std::vector<std::string>> k_matrix_strings(const KElement &M);
/// Row-major dense form of a single-site HW element.
std::vector<std::vector<std::string>> hw_matrix_strings(const HWElement &h);

}  // namespace lcsmbqc
