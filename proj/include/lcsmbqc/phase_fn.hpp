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
#include <span>
#include <vector>

#include "lcsmbqc/cyclo.hpp"

namespace lcsmbqc {

/// A function xi: Z_p -> U(1) stored as its value table, values[q] = xi(q).
struct PhaseFunction {
    int64_t p;
    std::vector<Phase> values;

    /// Throws std::invalid_argument unless values.size() == p and every value has prime p.
    PhaseFunction(int64_t p, std::vector<Phase> values);

    static PhaseFunction identity(int64_t p);
    static PhaseFunction constant(int64_t p, const Phase &c);
    /// q -> omega^{sum_a coeffs[a] q^a}, with 0^0 = 1.
    static PhaseFunction omega_poly(int64_t p, std::span<const int64_t> coeffs);

    const Phase &operator()(int64_t q) const;
    bool operator==(const PhaseFunction &other) const = default;
};

/// theta[j - 1][a] holds the level-j coefficient of q^a.
struct LevelCoefficients {
    int64_t p;
    int m;
    std::vector<std::vector<int64_t>> theta;

    LevelCoefficients(int64_t p, int m);

    int64_t at(int j, int a) const {
        return j <= m ? theta[j - 1][a] : 0;
    }
    bool operator==(const LevelCoefficients &other) const = default;
};

PhaseFunction pf_mul(const PhaseFunction &x, const PhaseFunction &y);
PhaseFunction pf_pow(const PhaseFunction &x, int64_t k);
PhaseFunction pf_inv(const PhaseFunction &x);
/// (b . x)(q) = x(q - b).
PhaseFunction pf_act(int64_t b, const PhaseFunction &x);
Phase pf_det(const PhaseFunction &x);
bool in_special_torus(const PhaseFunction &x);
/// Largest level among the values; defined for any table.
int pf_value_level(const PhaseFunction &x);
/// Smallest m with x^{p^m} = 1. Throws std::invalid_argument if pf_det(x) != 1.
int pf_level(const PhaseFunction &x);
/// Returns the constant when x is constant.
std::optional<Phase> pf_constant_value(const PhaseFunction &x);

/// Unique level coefficients of x at level m. Throws std::invalid_argument if some value
/// is not a p^m-th root of unity.
LevelCoefficients pf_decompose(const PhaseFunction &x, int m);
PhaseFunction pf_reconstruct(const LevelCoefficients &c);

}  // namespace lcsmbqc
