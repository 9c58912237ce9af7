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

#include "lcsmbqc/zp.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace lcsmbqc {

int64_t ipow(int64_t base, int exp) {
    if (exp < 0) {
        throw std::invalid_argument("ipow: negative exponent");
    }
    int64_t result = 1;
    for (int i = 0; i < exp; i++) {
        if (base != 0 && std::abs(result) > std::numeric_limits<int64_t>::max() / std::abs(base)) {
            throw std::overflow_error("ipow: overflow computing " + std::to_string(base) + "^" + std::to_string(exp));
        }
        result *= base;
    }
    return result;
}

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

int64_t pow_mod(int64_t a, int64_t e, int64_t m) {
    int64_t result = 1 % m;
    int64_t base = mod(a, m);
    while (e > 0) {
        if (e & 1) {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    return result;
}

int64_t inv_mod(int64_t a, int64_t p) {
    int64_t r = mod(a, p);
    if (r == 0) {
        throw std::domain_error("inv_mod: 0 has no inverse mod " + std::to_string(p));
    }
    // Extended Euclid.
    int64_t old_r = r, cur_r = p, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        int64_t q = old_r / cur_r;
        int64_t t = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = t;
        t = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = t;
    }
    if (old_r != 1) {
        throw std::domain_error("inv_mod: modulus is not prime relative to the argument");
    }
    return mod(old_s, p);
}

std::vector<int64_t> interpolate_zp(std::span<const int64_t> values, int64_t p) {
    if (static_cast<int64_t>(values.size()) != p) {
        throw std::invalid_argument("interpolate_zp: expected one value per point of Z_p");
    }
    std::vector<int64_t> coeffs(p, 0);
    for (int64_t j = 0; j < p; j++) {
        int64_t yj = mod(values[j], p);
        if (yj == 0) {
            continue;
        }
        // basis(x) = prod_{k != j} (x - k) / (j - k)
        std::vector<int64_t> basis{1};
        int64_t denom = 1;
        for (int64_t k = 0; k < p; k++) {
            if (k == j) {
                continue;
            }
            std::vector<int64_t> next(basis.size() + 1, 0);
            for (size_t a = 0; a < basis.size(); a++) {
                next[a + 1] = mod(next[a + 1] + basis[a], p);
                next[a] = mod(next[a] - k * basis[a], p);
            }
            basis = std::move(next);
            denom = mod(denom * (j - k), p);
        }
        int64_t scale = mod(yj * inv_mod(denom, p), p);
        for (size_t a = 0; a < basis.size(); a++) {
            coeffs[a] = mod(coeffs[a] + scale * basis[a], p);
        }
    }
    return coeffs;
}

int64_t eval_poly_zp(std::span<const int64_t> coeffs, int64_t q, int64_t p) {
    int64_t acc = 0;
    int64_t power = 1;
    int64_t x = mod(q, p);
    for (int64_t c : coeffs) {
        acc = mod(acc + c * power, p);
        power = power * x % p;
    }
    return acc;
}

}  // namespace lcsmbqc
