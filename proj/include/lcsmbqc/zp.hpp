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
#include <span>
#include <vector>

/// Integer helpers for arithmetic in Z_p and Z_{p^M}.
namespace lcsmbqc {

/// Non-negative remainder of a modulo m (m > 0).
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// base^exp for small non-negative exponents; throws std::overflow_error past int64.
int64_t ipow(int64_t base, int exp);

bool is_prime(int64_t n);

/// Multiplicative inverse of a modulo the prime p. Throws std::domain_error if a = 0 mod p.
int64_t inv_mod(int64_t a, int64_t p);

/// a^e mod m with e >= 0, evaluated with 0^0 = 1.
int64_t pow_mod(int64_t a, int64_t e, int64_t m);

/// Coefficients c_0..c_{p-1} of the unique polynomial of degree <= p-1 over Z_p
/// whose values at q = 0..p-1 are `values` (Lagrange interpolation).
std::vector<int64_t> interpolate_zp(std::span<const int64_t> values, int64_t p);

/// Evaluates sum_a coeffs[a] q^a mod p, with 0^0 = 1.
int64_t eval_poly_zp(std::span<const int64_t> coeffs, int64_t q, int64_t p);

}  // namespace lcsmbqc
