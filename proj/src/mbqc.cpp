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


#include "lcsmbqc/mbqc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

void MbqcSpec::validate() const {
    if (!is_prime(p)) {
        throw std::invalid_argument("MbqcSpec: p is not prime");
    }
    if (sites.empty()) {
        throw std::invalid_argument("MbqcSpec: no sites");
    }
    for (size_t k = 0; k < sites.size(); k++) {
        const auto &s = sites[k];
        if (s.xi.p != p) {
            throw std::invalid_argument("MbqcSpec: site " + std::to_string(k) + " has the wrong prime");
        }
        if (s.coeffs.size() != n_inputs) {
            throw std::invalid_argument(
                "MbqcSpec: site " + std::to_string(k) + " needs " + std::to_string(n_inputs) + " setting coefficients");
        }
        // KElement construction checks det = 1 and the level cap.
        KElement(s.xi, 1, m);
    }
}

int64_t MbqcSpec::setting(size_t k, const std::vector<int64_t> &input) const {
    const auto &s = sites[k];
    int64_t acc = s.offset;
    for (size_t j = 0; j < n_inputs; j++) {
        acc += s.coeffs[j] * input[j];
    }
    return mod(acc, p);
}

bool OutputTable::all_deterministic() const {
    return std::all_of(eigenvalue.begin(), eigenvalue.end(), [](const auto &e) { return e.has_value(); });
}

bool OutputTable::complete() const {
    return std::all_of(o.begin(), o.end(), [](const auto &v) { return v.has_value(); });
}

KElement measurement_op(const PhaseFunction &xi, int64_t l, int m) {
    return KElement(pf_pow(xi, mod(l, xi.p)), 1, m);
}

PhaseFunction star_base(int64_t p) {
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("star_base: requires an odd prime");
    }
    std::vector<Phase> vals;
    vals.reserve(p);
    for (int64_t q = 0; q < p; q++) {
        vals.push_back(Phase(p, 2, 1) * Phase::omega(p, pow_mod(q - 1, p - 1, p)));
    }
    return PhaseFunction(p, std::move(vals));
}

KElement star_measurement_op(int64_t p, int64_t l) {
    return measurement_op(star_base(p), l, 2);
}

std::optional<Phase> ghz_evaluate(const TensorElement &E) {
    int64_t b = E.sites[0].b;
    for (const auto &s : E.sites) {
        if (s.b != b) {
            return std::nullopt;
        }
    }
    std::optional<Phase> lambda;
    for (int64_t q = 0; q < E.p(); q++) {
        Phase branch = E.global;
        for (const auto &s : E.sites) {
            branch *= s.xi.values[q];
        }
        if (lambda && !(*lambda == branch)) {
            return std::nullopt;
        }
        lambda = branch;
    }
    return lambda;
}

std::vector<std::vector<int64_t>> all_inputs(int64_t p, size_t n) {
    int64_t total = ipow(p, static_cast<int>(n));
    std::vector<std::vector<int64_t>> out;
    out.reserve(total);
    for (int64_t idx = 0; idx < total; idx++) {
        std::vector<int64_t> x(n);
        int64_t t = idx;
        for (size_t j = n; j-- > 0;) {
            x[j] = t % p;
            t /= p;
        }
        out.push_back(std::move(x));
    }
    return out;
}

TensorElement mbqc_operator(const MbqcSpec &spec, const std::vector<int64_t> &input) {
    if (input.size() != spec.n_inputs) {
        throw std::invalid_argument("mbqc_operator: wrong input length");
    }
    std::vector<KElement> sites;
    sites.reserve(spec.sites.size());
    for (size_t k = 0; k < spec.sites.size(); k++) {
        sites.push_back(measurement_op(spec.sites[k].xi, spec.setting(k, input), spec.m));
    }
    return TensorElement(Phase::one(spec.p), std::move(sites));
}

OutputTable output_table(const MbqcSpec &spec) {
    spec.validate();
    OutputTable t{spec.p, spec.n_inputs, all_inputs(spec.p, spec.n_inputs), {}, {}};
    for (const auto &input : t.inputs) {
        auto lambda = ghz_evaluate(mbqc_operator(spec, input));
        t.eigenvalue.push_back(lambda);
        t.o.push_back(lambda ? lambda->as_omega_power() : std::nullopt);
    }
    return t;
}

int64_t MultiPoly::eval(const std::vector<int64_t> &x) const {
    auto exps = all_inputs(p, n);
    int64_t acc = 0;
    for (size_t r = 0; r < exps.size(); r++) {
        if (coeffs[r] == 0) {
            continue;
        }
        int64_t term = coeffs[r];
        for (size_t j = 0; j < n; j++) {
            term = term * pow_mod(x[j], exps[r][j], p) % p;
        }
        acc = (acc + term) % p;
    }
    return acc;
}

int MultiPoly::total_degree() const {
    auto exps = all_inputs(p, n);
    int best = 0;
    for (size_t r = 0; r < exps.size(); r++) {
        if (coeffs[r] != 0) {
            int d = 0;
            for (auto e : exps[r]) {
                d += static_cast<int>(e);
            }
            best = std::max(best, d);
        }
    }
    return best;
}

MultiPoly interpolate_poly(const OutputTable &t) {
    if (!t.complete()) {
        throw std::invalid_argument("interpolate_poly: table has non-deterministic or non-omega rows");
    }
    MultiPoly poly{t.p, t.n_inputs, {}};
    for (const auto &v : t.o) {
        poly.coeffs.push_back(*v);
    }
    // Interpolate along one axis at a time; axis j has stride p^{n-1-j}.
    int64_t total = static_cast<int64_t>(poly.coeffs.size());
    std::vector<int64_t> line(t.p);
    for (size_t j = 0; j < t.n_inputs; j++) {
        int64_t stride = ipow(t.p, static_cast<int>(t.n_inputs - 1 - j));
        for (int64_t base = 0; base < total; base++) {
            if ((base / stride) % t.p != 0) {
                continue;
            }
            for (int64_t k = 0; k < t.p; k++) {
                line[k] = poly.coeffs[base + k * stride];
            }
            auto c = interpolate_zp(line, t.p);
            for (int64_t k = 0; k < t.p; k++) {
                poly.coeffs[base + k * stride] = c[k];
            }
        }
    }
    return poly;
}

ContextualityVerdict contextuality_witness(const OutputTable &t) {
    int d = interpolate_poly(t).total_degree();
    return ContextualityVerdict{d, d >= t.p};
}

MbqcSpec qudit_star_spec(int64_t p) {
    PhaseFunction base = star_base(p);
    MbqcSpec spec{p, 2, 2, {}};
    spec.sites.push_back(MbqcSite{base, {1, 0}, 0});
    spec.sites.push_back(MbqcSite{base, {0, 1}, 0});
    spec.sites.push_back(MbqcSite{base, {mod(-1, p), mod(-1, p)}, 0});
    return spec;
}

MbqcSpec qubit_star_spec() {
    PhaseFunction S(2, {Phase(2, 2, 3), Phase(2, 2, 1)});
    MbqcSpec spec{2, 2, 2, {}};
    spec.sites.push_back(MbqcSite{S, {1, 0}, 0});
    spec.sites.push_back(MbqcSite{S, {0, 1}, 0});
    spec.sites.push_back(MbqcSite{S, {1, 1}, 0});
    return spec;
}

int64_t qudit_star_closed_form(int64_t p, int64_t i1, int64_t i2) {
    i1 = mod(i1, p);
    i2 = mod(i2, p);
    if (i1 == 0 && i2 == 0) {
        return 0;
    }
    return i1 + i2 <= p ? 1 : 2;
}

}  // namespace lcsmbqc
