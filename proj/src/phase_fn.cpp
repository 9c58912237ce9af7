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


#include "lcsmbqc/phase_fn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

PhaseFunction::PhaseFunction(int64_t p, std::vector<Phase> values) : p(p), values(std::move(values)) {
    if (static_cast<int64_t>(this->values.size()) != p) {
        throw std::invalid_argument(
            "PhaseFunction: expected " + std::to_string(p) + " values, got " + std::to_string(this->values.size()));
    }
    for (const auto &v : this->values) {
        if (v.p() != p) {
            throw std::invalid_argument("PhaseFunction: value with prime " + std::to_string(v.p()));
        }
    }
}

PhaseFunction PhaseFunction::identity(int64_t p) {
    return constant(p, Phase::one(p));
}

PhaseFunction PhaseFunction::constant(int64_t p, const Phase &c) {
    return PhaseFunction(p, std::vector<Phase>(p, c));
}

PhaseFunction PhaseFunction::omega_poly(int64_t p, std::span<const int64_t> coeffs) {
    std::vector<Phase> vals;
    vals.reserve(p);
    for (int64_t q = 0; q < p; q++) {
        vals.push_back(Phase::omega(p, eval_poly_zp(coeffs, q, p)));
    }
    return PhaseFunction(p, std::move(vals));
}

const Phase &PhaseFunction::operator()(int64_t q) const {
    return values[mod(q, p)];
}

LevelCoefficients::LevelCoefficients(int64_t p, int m) : p(p), m(m), theta(m, std::vector<int64_t>(p, 0)) {
}

static void require_same_p(const PhaseFunction &x, const PhaseFunction &y) {
    if (x.p != y.p) {
        throw std::invalid_argument("PhaseFunction: prime mismatch");
    }
}

PhaseFunction pf_mul(const PhaseFunction &x, const PhaseFunction &y) {
    require_same_p(x, y);
    std::vector<Phase> vals;
    vals.reserve(x.p);
    for (int64_t q = 0; q < x.p; q++) {
        vals.push_back(x.values[q] * y.values[q]);
    }
    return PhaseFunction(x.p, std::move(vals));
}

PhaseFunction pf_pow(const PhaseFunction &x, int64_t k) {
    std::vector<Phase> vals;
    vals.reserve(x.p);
    for (const auto &v : x.values) {
        vals.push_back(v.pow(k));
    }
    return PhaseFunction(x.p, std::move(vals));
}

PhaseFunction pf_inv(const PhaseFunction &x) {
    return pf_pow(x, -1);
}

PhaseFunction pf_act(int64_t b, const PhaseFunction &x) {
    std::vector<Phase> vals;
    vals.reserve(x.p);
    for (int64_t q = 0; q < x.p; q++) {
        vals.push_back(x(q - b));
    }
    return PhaseFunction(x.p, std::move(vals));
}

Phase pf_det(const PhaseFunction &x) {
    Phase acc = Phase::one(x.p);
    for (const auto &v : x.values) {
        acc *= v;
    }
    return acc;
}

bool in_special_torus(const PhaseFunction &x) {
    return pf_det(x).is_one();
}

int pf_value_level(const PhaseFunction &x) {
    int lvl = 0;
    for (const auto &v : x.values) {
        lvl = std::max(lvl, v.level());
    }
    return lvl;
}

int pf_level(const PhaseFunction &x) {
    if (!in_special_torus(x)) {
        throw std::invalid_argument("pf_level: function is not in the special torus (det = " + pf_det(x).str() + ")");
    }
    return pf_value_level(x);
}

std::optional<Phase> pf_constant_value(const PhaseFunction &x) {
    for (const auto &v : x.values) {
        if (!(v == x.values[0])) {
            return std::nullopt;
        }
    }
    return x.values[0];
}

LevelCoefficients pf_decompose(const PhaseFunction &x, int m) {
    if (m < 0) {
        throw std::invalid_argument("pf_decompose: negative level");
    }
    if (pf_value_level(x) > m) {
        throw std::invalid_argument(
            "pf_decompose: some value is not a " + std::to_string(x.p) + "^" + std::to_string(m) + "-th root of unity");
    }
    LevelCoefficients out(x.p, m);
    std::vector<int64_t> y(x.p);
    for (int64_t q = 0; q < x.p; q++) {
        y[q] = x.values[q].num_at_level(m);
    }
    std::vector<int64_t> digits(x.p);
    for (int k = 1; k <= m; k++) {
        int64_t place = ipow(x.p, m - k);
        for (int64_t q = 0; q < x.p; q++) {
            digits[q] = (y[q] / place) % x.p;
        }
        out.theta[k - 1] = interpolate_zp(digits, x.p);
    }
    return out;
}

PhaseFunction pf_reconstruct(const LevelCoefficients &c) {
    std::vector<Phase> vals;
    vals.reserve(c.p);
    for (int64_t q = 0; q < c.p; q++) {
        int64_t y = 0;
        for (int k = 1; k <= c.m; k++) {
            y += eval_poly_zp(c.theta[k - 1], q, c.p) * ipow(c.p, c.m - k);
        }
        vals.push_back(Phase(c.p, c.m, y, std::max(c.m, kDefaultMaxLevel)));
    }
    return PhaseFunction(c.p, std::move(vals));
}

}  // namespace lcsmbqc
