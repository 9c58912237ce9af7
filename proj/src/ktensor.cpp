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


#include "lcsmbqc/ktensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

TensorElement::TensorElement(Phase global_, std::vector<KElement> sites_)
    : global(std::move(global_)), sites(std::move(sites_)) {
    if (sites.empty()) {
        throw std::invalid_argument("TensorElement: needs at least one site");
    }
    for (const auto &s : sites) {
        if (s.p() != global.p() || s.m != sites[0].m) {
            throw std::invalid_argument("TensorElement: sites disagree on p or level cap");
        }
    }
}

TensorElement TensorElement::identity(int64_t p, int m, size_t n) {
    return TensorElement(Phase::one(p), std::vector<KElement>(n, KElement::identity(p, m)));
}

TensorElement TensorElement::scalar(int64_t p, int m, size_t n, int64_t c) {
    return TensorElement(Phase::omega(p, c), std::vector<KElement>(n, KElement::identity(p, m)));
}

TensorElement TensorElement::local(size_t n, size_t i, const KElement &M) {
    if (i >= n) {
        throw std::invalid_argument("TensorElement::local: site index out of range");
    }
    std::vector<KElement> s(n, KElement::identity(M.p(), M.m));
    s[i] = M;
    return TensorElement(Phase::one(M.p()), std::move(s));
}

TensorNormalForm t_normal_form(const TensorElement &E) {
    TensorNormalForm nf{E.global, {}, {}};
    for (const auto &s : E.sites) {
        const Phase &c = s.xi.values[0];
        nf.global *= c;
        nf.xi.push_back(pf_mul(s.xi, PhaseFunction::constant(s.p(), c.inverse())));
        nf.b.push_back(s.b);
    }
    return nf;
}

bool TensorElement::operator==(const TensorElement &other) const {
    if (p() != other.p() || n() != other.n()) {
        return false;
    }
    return t_normal_form(*this) == t_normal_form(other);
}

std::optional<Phase> TensorElement::as_scalar() const {
    Phase acc = global;
    for (const auto &s : sites) {
        if (s.b != 0) {
            return std::nullopt;
        }
        auto c = pf_constant_value(s.xi);
        if (!c) {
            return std::nullopt;
        }
        acc *= *c;
    }
    return acc;
}

bool TensorElement::is_identity() const {
    auto s = as_scalar();
    return s && s->is_one();
}

std::string TensorElement::str() const {
    std::ostringstream ss;
    ss << global;
    for (const auto &s : sites) {
        ss << " (x) " << s.str();
    }
    return ss.str();
}

static void require_same_shape(const TensorElement &E, const TensorElement &F) {
    if (E.p() != F.p() || E.n() != F.n() || E.m() != F.m()) {
        throw std::invalid_argument("TensorElement: shape mismatch");
    }
}

TensorElement t_mul(const TensorElement &E, const TensorElement &F) {
    require_same_shape(E, F);
    std::vector<KElement> s;
    s.reserve(E.n());
    for (size_t i = 0; i < E.n(); i++) {
        s.push_back(k_mul(E.sites[i], F.sites[i]));
    }
    return TensorElement(E.global * F.global, std::move(s));
}

TensorElement t_inv(const TensorElement &E) {
    std::vector<KElement> s;
    s.reserve(E.n());
    for (const auto &site : E.sites) {
        s.push_back(k_inv(site));
    }
    return TensorElement(E.global.inverse(), std::move(s));
}

TensorElement t_pow(const TensorElement &E, int64_t n) {
    std::vector<KElement> s;
    s.reserve(E.n());
    for (const auto &site : E.sites) {
        s.push_back(k_pow(site, n));
    }
    return TensorElement(E.global.pow(n), std::move(s));
}

TensorElement t_commutator(const TensorElement &E, const TensorElement &F) {
    require_same_shape(E, F);
    std::vector<KElement> s;
    s.reserve(E.n());
    for (size_t i = 0; i < E.n(); i++) {
        s.push_back(k_commutator(E.sites[i], F.sites[i]));
    }
    return TensorElement(Phase::one(E.p()), std::move(s));
}

std::optional<Phase> t_commutator_scalar(const TensorElement &E, const TensorElement &F) {
    return t_commutator(E, F).as_scalar();
}

std::optional<int64_t> t_commutator_exponent(const TensorElement &E, const TensorElement &F) {
    auto s = t_commutator_scalar(E, F);
    if (!s) {
        return std::nullopt;
    }
    return s->as_omega_power();
}

bool t_commute(const TensorElement &E, const TensorElement &F) {
    return t_commutator(E, F).is_identity();
}

bool t_is_p_torsion(const TensorElement &E) {
    Phase acc = E.global.pow(E.p());
    for (const auto &s : E.sites) {
        KElement sp = k_pow(s, s.p());
        auto c = pf_constant_value(sp.xi);
        if (!c) {
            return false;
        }
        acc *= *c;
    }
    return acc.is_one();
}

bool t_is_p_torsion_structural(const TensorElement &E) {
    int64_t p = E.p();
    if (E.global.level() > 2) {
        return false;
    }
    int64_t total = E.global.num_at_level(2) % p;
    for (const auto &s : E.sites) {
        if (s.b != 0) {
            continue;
        }
        int lvl = std::max(2, s.m);
        auto th = pf_decompose(s.xi, lvl);
        for (int j = 2; j <= lvl; j++) {
            for (int64_t a = 0; a < p; a++) {
                if ((a != 0 || j >= 3) && th.at(j, static_cast<int>(a)) != 0) {
                    return false;
                }
            }
        }
        total += th.at(2, 0);
    }
    return total % p == 0;
}

static int64_t theta11(const PhaseFunction &xi, int m) {
    return pf_decompose(xi, std::max(m, 1)).at(1, 1);
}

SymplecticVector t_symplectic_vector(const TensorElement &E) {
    int64_t p = E.p();
    SymplecticVector v;
    for (const auto &s : E.sites) {
        v.bbar.push_back(s.b);
        if (s.b == 0) {
            v.fbar.push_back(theta11(s.xi, s.m));
        } else {
            KElement unit = k_pow(s, inv_mod(s.b, p));
            v.fbar.push_back(mod(s.b * theta11(unit.xi, s.m), p));
        }
    }
    return v;
}

SymplecticVector t_symplectic_vector_literal(const TensorElement &E) {
    SymplecticVector v;
    for (const auto &s : E.sites) {
        v.bbar.push_back(s.b);
        v.fbar.push_back(theta11(s.xi, s.m));
    }
    return v;
}

int64_t symplectic_form(const SymplecticVector &v, const SymplecticVector &w, int64_t p) {
    if (v.fbar.size() != w.fbar.size() || v.bbar.size() != w.bbar.size() || v.fbar.size() != v.bbar.size()) {
        throw std::invalid_argument("symplectic_form: shape mismatch");
    }
    int64_t acc = 0;
    for (size_t i = 0; i < v.fbar.size(); i++) {
        acc += v.fbar[i] * w.bbar[i] - w.fbar[i] * v.bbar[i];
    }
    return mod(acc, p);
}

bool is_isotropic(const std::vector<SymplecticVector> &vs, int64_t p) {
    for (size_t i = 0; i < vs.size(); i++) {
        for (size_t j = i + 1; j < vs.size(); j++) {
            if (symplectic_form(vs[i], vs[j], p) != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace lcsmbqc
