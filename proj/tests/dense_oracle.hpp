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


// Dense exact matrices over p-power roots of unity, used as an independent check on the
// pair-based group arithmetic. Entries are stored as exponents over a fixed denominator p^L,
// or -1 for zero. Products throw if an entry would need a sum of two roots of unity.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcsmbqc/ktensor.hpp"

namespace oracle {

struct Dense {
    int64_t p;
    int64_t denom;
    size_t dim;
    std::vector<int64_t> e;

    Dense(int64_t p, int L, size_t dim) : p(p), denom(1), dim(dim), e(dim * dim, -1) {
        for (int i = 0; i < L; i++) {
            denom *= p;
        }
    }
    int64_t &at(size_t r, size_t c) {
        return e[r * dim + c];
    }
    int64_t at(size_t r, size_t c) const {
        return e[r * dim + c];
    }
    bool operator==(const Dense &o) const {
        return dim == o.dim && denom == o.denom && e == o.e;
    }
};

inline int64_t wrap(int64_t a, int64_t m) {
    return ((a % m) + m) % m;
}

inline int64_t exponent(const lcsmbqc::Phase &ph, int L) {
    int64_t scale = 1;
    for (int i = ph.level(); i < L; i++) {
        scale *= ph.p();
    }
    return ph.num() * scale;
}

inline Dense identity(int64_t p, int L, size_t dim) {
    Dense d(p, L, dim);
    for (size_t i = 0; i < dim; i++) {
        d.at(i, i) = 0;
    }
    return d;
}

inline Dense mul(const Dense &a, const Dense &b) {
    Dense r(a.p, 0, a.dim);
    r.denom = a.denom;
    for (size_t i = 0; i < a.dim; i++) {
        for (size_t j = 0; j < a.dim; j++) {
            int terms = 0;
            for (size_t k = 0; k < a.dim; k++) {
                if (a.at(i, k) >= 0 && b.at(k, j) >= 0) {
                    r.at(i, j) = wrap(a.at(i, k) + b.at(k, j), a.denom);
                    terms++;
                }
            }
            if (terms > 1) {
                throw std::logic_error("oracle: product is not monomial");
            }
        }
    }
    return r;
}

/// Inverse of a unitary monomial matrix: conjugate transpose.
inline Dense inverse(const Dense &a) {
    Dense r = a;
    for (size_t i = 0; i < a.dim; i++) {
        for (size_t j = 0; j < a.dim; j++) {
            int64_t v = a.at(j, i);
            r.at(i, j) = v < 0 ? -1 : wrap(-v, a.denom);
        }
    }
    return r;
}

inline Dense kron(const Dense &a, const Dense &b) {
    Dense r(a.p, 0, a.dim * b.dim);
    r.denom = a.denom;
    for (size_t i = 0; i < a.dim; i++) {
        for (size_t j = 0; j < a.dim; j++) {
            for (size_t k = 0; k < b.dim; k++) {
                for (size_t l = 0; l < b.dim; l++) {
                    if (a.at(i, j) >= 0 && b.at(k, l) >= 0) {
                        r.at(i * b.dim + k, j * b.dim + l) = wrap(a.at(i, j) + b.at(k, l), a.denom);
                    }
                }
            }
        }
    }
    return r;
}

inline Dense scale(const Dense &a, int64_t exp) {
    Dense r = a;
    for (auto &v : r.e) {
        if (v >= 0) {
            v = wrap(v + exp, a.denom);
        }
    }
    return r;
}

/// S_xi X^b: column q has entry xi(q + b) in row q + b.
inline Dense from_k(const lcsmbqc::KElement &M, int L = lcsmbqc::kDefaultMaxLevel) {
    int64_t p = M.p();
    Dense d(p, L, static_cast<size_t>(p));
    for (int64_t q = 0; q < p; q++) {
        int64_t r = (q + M.b) % p;
        d.at(r, q) = exponent(M.xi.values[r], L);
    }
    return d;
}

inline Dense from_tensor(const lcsmbqc::TensorElement &E, int L = lcsmbqc::kDefaultMaxLevel) {
    Dense d = from_k(E.sites[0], L);
    for (size_t i = 1; i < E.sites.size(); i++) {
        d = kron(d, from_k(E.sites[i], L));
    }
    return scale(d, exponent(E.global, L));
}

}  // namespace oracle
