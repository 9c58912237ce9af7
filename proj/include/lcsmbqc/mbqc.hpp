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
#include <vector>

#include "lcsmbqc/ktensor.hpp"

namespace lcsmbqc {

/// One measured site: base table xi and affine setting l(i) = sum_j coeffs[j] i_j + offset.
struct MbqcSite {
    PhaseFunction xi;
    std::vector<int64_t> coeffs;
    int64_t offset = 0;
};

/// Deterministic non-adaptive MBQC on the N-site GHZ state sum_q |q>^{(x) N}.
struct MbqcSpec {
    int64_t p;
    int m;
    size_t n_inputs;
    std::vector<MbqcSite> sites;

    /// Throws std::invalid_argument on inconsistent shapes or a base table outside the torus.
    void validate() const;
    /// l_k(i) reduced to [0, p).
    int64_t setting(size_t k, const std::vector<int64_t> &input) const;
};

struct OutputTable {
    int64_t p;
    size_t n_inputs;
    /// Inputs in lexicographic order, i_1 most significant.
    std::vector<std::vector<int64_t>> inputs;
    std::vector<std::optional<Phase>> eigenvalue;
    /// o(i) when the eigenvalue exists and is a power of w.
    std::vector<std::optional<int64_t>> o;

    bool deterministic(size_t row) const {
        return eigenvalue[row].has_value();
    }
    bool all_deterministic() const;
    /// True when every row has an omega-power output.
    bool complete() const;
};

/// (xi^l, 1) with l reduced to [0, p) before the pointwise power.
KElement measurement_op(const PhaseFunction &xi, int64_t l, int m);
/// xi_1(q) = theta(1) w^{(q-1)^{p-1}} with theta(1) = exp(2 pi i / p^2); the table sits on the
/// target of the shift, so M(l)|q> = theta(l) w^{l q^{p-1}} |q+1>.
PhaseFunction star_base(int64_t p);
/// M(l) = measurement_op(star_base(p), l). Throws std::invalid_argument for p = 2.
KElement star_measurement_op(int64_t p, int64_t l);

/// The common eigenvalue of E on the GHZ state, or nullopt if the shifts differ or the
/// per-branch phase depends on the branch.
std::optional<Phase> ghz_evaluate(const TensorElement &E);

/// The measurement operator for input i.
TensorElement mbqc_operator(const MbqcSpec &spec, const std::vector<int64_t> &input);
/// All p^n inputs, i_1 most significant.
std::vector<std::vector<int64_t>> all_inputs(int64_t p, size_t n);
OutputTable output_table(const MbqcSpec &spec);

/// Coefficients of the unique polynomial with individual degrees < p, indexed like all_inputs
/// (exponent of i_1 most significant).
struct MultiPoly {
    int64_t p;
    size_t n;
    std::vector<int64_t> coeffs;

    int64_t eval(const std::vector<int64_t> &x) const;
    /// Largest total degree with a nonzero coefficient; 0 for constants and the zero polynomial.
    int total_degree() const;
};

/// Throws std::invalid_argument if some row has no omega-power output.
MultiPoly interpolate_poly(const OutputTable &t);

struct ContextualityVerdict {
    int degree;
    bool contextual;
};

/// Degree witness: contextual iff the interpolated output has total degree >= p.
ContextualityVerdict contextuality_witness(const OutputTable &t);

/// l_1 = i_1, l_2 = i_2, l_3 = -i_1 - i_2 with star operators. Throws for p = 2.
MbqcSpec qudit_star_spec(int64_t p);
/// l_1 = i_1, l_2 = i_2, l_3 = i_1 + i_2 with base diag(-i, i) at p = 2.
MbqcSpec qubit_star_spec();

/// 0 if i_1 = i_2 = 0, 1 if i_1 + i_2 <= p, 2 otherwise.
int64_t qudit_star_closed_form(int64_t p, int64_t i1, int64_t i2);

}  // namespace lcsmbqc
