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


#include "lcsmbqc/projection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

HWElement::HWElement(int64_t p_, Phase c_, std::vector<int64_t> a_, std::vector<int64_t> b_)
    : p(p_), c(std::move(c_)), a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("HWElement: a and b differ in length");
    }
    if (c.p() != p) {
        throw std::invalid_argument("HWElement: prime mismatch");
    }
    for (auto &x : a) {
        x = mod(x, p);
    }
    for (auto &x : b) {
        x = mod(x, p);
    }
}

HWElement HWElement::identity(int64_t p, size_t n) {
    return HWElement(p, Phase::one(p), std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0));
}

bool HWElement::is_identity() const {
    return c.is_one() && std::all_of(a.begin(), a.end(), [](int64_t x) { return x == 0; }) &&
           std::all_of(b.begin(), b.end(), [](int64_t x) { return x == 0; });
}

std::string HWElement::str() const {
    std::ostringstream ss;
    ss << c;
    for (size_t i = 0; i < a.size(); i++) {
        ss << (i ? " (x) " : " * ") << "Z^" << a[i] << " X^" << b[i];
    }
    return ss.str();
}

static void require_same_shape(const HWElement &h, const HWElement &g) {
    if (h.p != g.p || h.n() != g.n()) {
        throw std::invalid_argument("HWElement: shape mismatch");
    }
}

HWElement hw_mul(const HWElement &h, const HWElement &g) {
    require_same_shape(h, g);
    // X^b Z^a' = w^{-a' b} Z^a' X^b.
    int64_t twist = 0;
    std::vector<int64_t> a(h.n()), b(h.n());
    for (size_t i = 0; i < h.n(); i++) {
        twist += g.a[i] * h.b[i];
        a[i] = h.a[i] + g.a[i];
        b[i] = h.b[i] + g.b[i];
    }
    return HWElement(h.p, h.c * g.c * Phase::omega(h.p, -twist), std::move(a), std::move(b));
}

HWElement hw_inv(const HWElement &h) {
    int64_t ab = 0;
    std::vector<int64_t> a(h.n()), b(h.n());
    for (size_t i = 0; i < h.n(); i++) {
        ab += h.a[i] * h.b[i];
        a[i] = -h.a[i];
        b[i] = -h.b[i];
    }
    return HWElement(h.p, h.c.inverse() * Phase::omega(h.p, -ab), std::move(a), std::move(b));
}

HWElement hw_pow(const HWElement &h, int64_t n) {
    if (n < 0) {
        return hw_pow(hw_inv(h), -n);
    }
    int64_t ab = 0;
    std::vector<int64_t> a(h.n()), b(h.n());
    for (size_t i = 0; i < h.n(); i++) {
        ab += h.a[i] * h.b[i];
        a[i] = h.a[i] * mod(n, h.p);
        b[i] = h.b[i] * mod(n, h.p);
    }
    // n(n-1)/2 mod p, kept exact for p = 2 by reducing n mod 2p first.
    int64_t nn = mod(n, 2 * h.p);
    int64_t tri = mod(nn * (nn - 1) / 2, h.p);
    return HWElement(h.p, h.c.pow(n) * Phase::omega(h.p, -mod(ab, h.p) * tri), std::move(a), std::move(b));
}

int64_t hw_commutator(const HWElement &h, const HWElement &g) {
    require_same_shape(h, g);
    int64_t acc = 0;
    for (size_t i = 0; i < h.n(); i++) {
        acc += h.a[i] * g.b[i] - g.a[i] * h.b[i];
    }
    return mod(acc, h.p);
}

TensorElement hw_to_tensor(const HWElement &h, int m) {
    std::vector<KElement> sites;
    sites.reserve(h.n());
    Phase global = h.c;
    for (size_t i = 0; i < h.n(); i++) {
        int64_t lin[] = {0, h.a[i]};
        PhaseFunction xi = PhaseFunction::omega_poly(h.p, lin);
        if (h.p == 2 && h.a[i] != 0) {
            // diag(1, -1) has det -1; carry it as i diag(-i, i) instead.
            xi = pf_mul(xi, PhaseFunction::constant(2, Phase(2, 2, 1)));
            global *= Phase(2, 2, -1);
        }
        sites.emplace_back(std::move(xi), h.b[i], m);
    }
    return TensorElement(global, std::move(sites));
}

const char *phi_variant_name(PhiVariant v) {
    switch (v) {
        case PhiVariant::kProof:
            return "proof";
        case PhiVariant::kDisplayed:
            return "displayed";
        case PhiVariant::kNaive:
            return "naive";
    }
    return "?";
}

PhiVariant parse_phi_variant(const std::string &name) {
    if (name == "proof") {
        return PhiVariant::kProof;
    }
    if (name == "displayed") {
        return PhiVariant::kDisplayed;
    }
    if (name == "naive") {
        return PhiVariant::kNaive;
    }
    throw std::invalid_argument("unknown phi variant '" + name + "' (expected proof, displayed or naive)");
}

HWLocal P_map(const PhaseFunction &xi, int m) {
    auto th = pf_decompose(xi, std::max(m, 1));
    return HWLocal{Phase::omega(xi.p, th.at(1, 0)), th.at(1, 1), 0};
}

HWLocal R_map(const PhaseFunction &xi, int m, PhiVariant variant) {
    int lvl = std::max(m, 2);
    auto th = pf_decompose(xi, lvl);
    for (int j = 2; j <= lvl; j++) {
        for (int a = 0; a < xi.p; a++) {
            if ((a != 0 || j >= 3) && th.at(j, a) != 0) {
                throw std::invalid_argument("R_map: table has level >= 2 coefficients beyond the constant");
            }
        }
    }
    Phase extra = variant == PhiVariant::kDisplayed ? Phase::omega(xi.p, th.at(2, 0)) : Phase(xi.p, 2, th.at(2, 0));
    return HWLocal{Phase::omega(xi.p, th.at(1, 0)) * extra, th.at(1, 1), 0};
}

static HWLocal local_pow(const HWLocal &h, int64_t n, int64_t p) {
    HWElement e = hw_pow(HWElement(p, h.scalar, {h.a}, {h.b}), n);
    return HWLocal{e.c, e.a[0], e.b[0]};
}

static HWLocal phi_local_impl(const KElement &M, PhiVariant variant) {
    int64_t p = M.p();
    if (variant == PhiVariant::kNaive) {
        HWLocal h = P_map(M.xi, M.m);
        h.b = M.b;
        return h;
    }
    if (M.b == 0) {
        return R_map(M.xi, M.m, variant);
    }
    if (M.b == 1) {
        HWLocal h = P_map(M.xi, M.m);
        h.b = 1;
        return h;
    }
    KElement unit = k_pow(M, inv_mod(M.b, p));
    return local_pow(phi_local_impl(unit, variant), M.b, p);
}

HWLocal phi_local(const KElement &M, PhiVariant variant) {
    if (M.p() == 2) {
        throw std::invalid_argument("phi_local: requires an odd prime");
    }
    if (!k_is_p_torsion(M)) {
        throw std::invalid_argument("phi_local: element is not p-torsion");
    }
    return phi_local_impl(M, variant);
}

HWElement phi(const TensorElement &E, PhiVariant variant) {
    if (E.p() == 2) {
        throw std::invalid_argument("phi: requires an odd prime");
    }
    if (!t_is_p_torsion(E)) {
        throw std::invalid_argument("phi: element is not p-torsion");
    }
    Phase c = E.global;
    std::vector<int64_t> a, b;
    for (const auto &s : E.sites) {
        HWLocal h = phi_local_impl(s, variant);
        c *= h.scalar;
        a.push_back(h.a);
        b.push_back(h.b);
    }
    return HWElement(E.p(), c, std::move(a), std::move(b));
}

static int64_t nu_impl(const HWElement &h, int sign) {
    if (h.p == 2) {
        throw std::invalid_argument("value_map_nu: requires an odd prime");
    }
    auto c = h.c.as_omega_power();
    if (!c) {
        throw std::invalid_argument("value_map_nu: global " + h.c.str() + " is not a power of w");
    }
    int64_t ab = 0;
    for (size_t i = 0; i < h.n(); i++) {
        ab += h.a[i] * h.b[i];
    }
    return mod(*c + sign * inv_mod(2, h.p) * mod(ab, h.p), h.p);
}

int64_t value_map_nu(const HWElement &h) {
    return nu_impl(h, +1);
}

int64_t value_map_nu_minus(const HWElement &h) {
    return nu_impl(h, -1);
}

std::vector<std::vector<std::string>> k_matrix_strings(const KElement &M) {
    int64_t p = M.p();
    std::vector<std::vector<std::string>> out(p, std::vector<std::string>(p, "0"));
    for (int64_t q = 0; q < p; q++) {
        int64_t r = mod(q + M.b, p);
        out[r][q] = M.xi.values[r].str();
    }
    return out;
}

std::vector<std::vector<std::string>> hw_matrix_strings(const HWElement &h) {
    if (h.n() != 1) {
        throw std::invalid_argument("hw_matrix_strings: expected a single site");
    }
    int64_t p = h.p;
    std::vector<std::vector<std::string>> out(p, std::vector<std::string>(p, "0"));
    for (int64_t q = 0; q < p; q++) {
        int64_t r = mod(q + h.b[0], p);
        out[r][q] = (h.c * Phase::omega(p, h.a[0] * r)).str();
    }
    return out;
}

EvenPrimeReport even_prime_counterexample() {
    // i = exp(2 pi i / 4).
    Phase i(2, 2, 1), minus_i(2, 2, 3);
    KElement M(PhaseFunction(2, {minus_i, i}), 1, 2);
    KElement N(PhaseFunction(2, {i, minus_i}), 1, 2);
    KElement MN = k_mul(M, N);
    auto to_hw = [](const KElement &K) {
        HWLocal h = phi_local_impl(K, PhiVariant::kNaive);
        return HWElement(2, h.scalar, {h.a}, {h.b});
    };
    HWElement pM = to_hw(M), pN = to_hw(N), pMN = to_hw(MN);
    HWElement prod = hw_mul(pM, pN);
    EvenPrimeReport rep{M,
                        N,
                        k_pow(M, 2).is_identity(),
                        k_pow(N, 2).is_identity(),
                        k_commutator(M, N).is_identity(),
                        MN == KElement::scalar(2, 2, 1),
                        pM,
                        pN,
                        pMN,
                        prod,
                        !(pMN == prod),
                        k_matrix_strings(M),
                        hw_matrix_strings(pM)};
    return rep;
}

}  // namespace lcsmbqc
