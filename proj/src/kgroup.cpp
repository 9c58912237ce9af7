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


#include "lcsmbqc/kgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

int64_t default_budget() {
    if (const char *env = std::getenv("LCSMBQC_BUDGET")) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultBudget;
}

KElement::KElement(PhaseFunction xi_, int64_t b_, int m_) : xi(std::move(xi_)), b(mod(b_, xi.p)), m(m_) {
    if (m < 0) {
        throw std::invalid_argument("KElement: negative level cap");
    }
    if (!in_special_torus(xi)) {
        throw std::invalid_argument("KElement: det(xi) = " + pf_det(xi).str() + " != 1");
    }
    if (pf_value_level(xi) > m) {
        throw std::invalid_argument(
            "KElement: xi has level " + std::to_string(pf_value_level(xi)) + " > " + std::to_string(m));
    }
}

bool KElement::is_identity() const {
    if (b != 0) {
        return false;
    }
    for (const auto &v : xi.values) {
        if (!v.is_one()) {
            return false;
        }
    }
    return true;
}

KElement KElement::identity(int64_t p, int m) {
    return KElement(PhaseFunction::identity(p), 0, m);
}

KElement KElement::X(int64_t p, int m) {
    return KElement(PhaseFunction::identity(p), 1, m);
}

KElement KElement::Z(int64_t p, int m) {
    int64_t lin[] = {0, 1};
    return KElement(PhaseFunction::omega_poly(p, lin), 0, m);
}

KElement KElement::scalar(int64_t p, int m, int64_t c) {
    return KElement(PhaseFunction::constant(p, Phase::omega(p, c)), 0, m);
}

std::vector<int64_t> KElement::key() const {
    std::vector<int64_t> k;
    k.reserve(xi.p + 1);
    for (const auto &v : xi.values) {
        k.push_back(v.num_at_level(m));
    }
    k.push_back(b);
    return k;
}

std::string KElement::str() const {
    std::ostringstream ss;
    ss << "((";
    for (int64_t q = 0; q < xi.p; q++) {
        if (q) {
            ss << ", ";
        }
        ss << xi.values[q];
    }
    ss << "), " << b << ")";
    return ss.str();
}

static void require_same_context(const KElement &M, const KElement &N) {
    if (M.p() != N.p() || M.m != N.m) {
        throw std::invalid_argument("KElement: context mismatch");
    }
}

KElement k_mul(const KElement &M, const KElement &N) {
    require_same_context(M, N);
    return KElement(pf_mul(M.xi, pf_act(M.b, N.xi)), M.b + N.b, M.m);
}

KElement k_inv(const KElement &M) {
    return KElement(pf_act(-M.b, pf_inv(M.xi)), -M.b, M.m);
}

KElement k_pow(const KElement &M, int64_t n) {
    if (n < 0) {
        return k_pow(k_inv(M), -n);
    }
    int64_t p = M.p();
    // Only the shifts i*b mod p matter, so the product folds into per-shift multiplicities.
    std::vector<int64_t> count(p, 0);
    for (int64_t r = 0; r < std::min<int64_t>(n, p); r++) {
        count[mod(r * M.b, p)] += (n - r + p - 1) / p;
    }
    PhaseFunction acc = PhaseFunction::identity(p);
    for (int64_t s = 0; s < p; s++) {
        if (count[s]) {
            acc = pf_mul(acc, pf_pow(pf_act(s, M.xi), count[s]));
        }
    }
    return KElement(std::move(acc), mod(n, p) * M.b, M.m);
}

KElement k_commutator(const KElement &M, const KElement &N) {
    require_same_context(M, N);
    // xi(q) xi'(q - b) xi^-1(q - b') xi'^-1(q)
    PhaseFunction out = pf_mul(pf_mul(M.xi, pf_act(M.b, N.xi)), pf_mul(pf_act(N.b, pf_inv(M.xi)), pf_inv(N.xi)));
    return KElement(std::move(out), 0, M.m);
}

bool k_is_p_torsion(const KElement &M) {
    return k_pow(M, M.p()).is_identity();
}

bool k_is_p_torsion_structural(const KElement &M) {
    return M.b != 0 || pf_value_level(M.xi) <= 1;
}

std::optional<Phase> k_commutator_scalar(const KElement &M, const KElement &N) {
    return pf_constant_value(k_commutator(M, N).xi);
}

std::optional<int64_t> k_scalar_commutant(const KElement &M, const KElement &N) {
    auto s = k_commutator_scalar(M, N);
    if (!s) {
        return std::nullopt;
    }
    return s->as_omega_power();
}

static void witness(bool ok, const char *what) {
    if (!ok) {
        throw std::logic_error(std::string("k_classify_commuting_pair: witness failed: ") + what);
    }
}

CommutingPairCase k_classify_commuting_pair(const KElement &M, const KElement &N) {
    require_same_context(M, N);
    int64_t p = M.p();
    if (p == 2) {
        throw std::invalid_argument("k_classify_commuting_pair: requires an odd prime");
    }
    auto c = k_scalar_commutant(M, N);
    if (!c) {
        throw std::invalid_argument("k_classify_commuting_pair: [M, N] is not an omega-power scalar");
    }
    CommutingPairCase out{};
    out.c = *c;
    if (M.b == 0 && N.b == 0) {
        witness(out.c == 0, "diagonal elements commute");
        out.which = 1;
        return out;
    }
    if (M.b == 0 || N.b == 0) {
        out.which = 2;
        out.swapped = M.b == 0;
        const KElement &off = out.swapped ? N : M;
        const KElement &diag = out.swapped ? M : N;
        // [off, diag] = omega^{c0} forces diag(q) = diag(0) omega^{-c0 q / b}.
        int64_t c0 = out.swapped ? mod(-out.c, p) : out.c;
        auto d0 = diag.xi.values[0].as_omega_power();
        witness(d0.has_value(), "diagonal entry at 0 is an omega-power");
        out.offset = *d0;
        out.slope = mod(-c0 * inv_mod(off.b, p), p);
        int64_t lin[] = {out.offset, out.slope};
        witness(PhaseFunction::omega_poly(p, lin) == diag.xi, "diagonal has affine omega form");
        out.diagonal_in_Tp = pf_value_level(diag.xi) <= 1;
        witness(out.diagonal_in_Tp, "diagonal lies in T_(p)");
        out.diagonal_central = out.slope == 0;
        witness(out.diagonal_central == (out.c == 0), "central iff commuting");
        return out;
    }
    out.which = 3;
    out.y = mod(N.b * inv_mod(M.b, p), p);
    out.cprime = mod(-out.c * inv_mod(N.b, p), p);
    int64_t lin[] = {0, out.cprime};
    KElement chi(PhaseFunction::omega_poly(p, lin), 0, M.m);
    KElement P = k_pow(k_mul(M, chi), out.y);
    auto ratio = pf_constant_value(pf_mul(P.xi, pf_inv(N.xi)));
    witness(ratio.has_value(), "(M S_chi)^y / N is scalar");
    auto a = ratio->as_omega_power();
    witness(a.has_value(), "scalar is an omega-power");
    out.a = *a;
    witness(P.b == N.b, "shift exponents agree");
    return out;
}

std::vector<PhaseFunction> special_torus_tables(int64_t p, int m, int64_t budget) {
    int64_t n_levels = ipow(p, m);
    int64_t count = ipow(n_levels, static_cast<int>(p - 1));
    if (count > budget) {
        throw BudgetExceeded(
            "special_torus_tables: " + std::to_string(count) + " tables exceed the budget of " +
            std::to_string(budget));
    }
    std::vector<PhaseFunction> out;
    out.reserve(count);
    std::vector<int64_t> digits(p - 1, 0);
    for (int64_t idx = 0; idx < count; idx++) {
        int64_t t = idx;
        int64_t total = 0;
        std::vector<Phase> vals;
        vals.reserve(p);
        // Last free entry varies fastest.
        for (int64_t q = p - 2; q >= 0; q--) {
            digits[q] = t % n_levels;
            t /= n_levels;
        }
        for (int64_t q = 0; q < p - 1; q++) {
            vals.emplace_back(p, m, digits[q], std::max(m, kDefaultMaxLevel));
            total += digits[q];
        }
        vals.emplace_back(p, m, -total, std::max(m, kDefaultMaxLevel));
        out.emplace_back(p, std::move(vals));
    }
    return out;
}

std::vector<KElement> k_enumerate(int64_t p, int m, int64_t budget) {
    int64_t total = ipow(p, static_cast<int>(m * (p - 1) + 1));
    if (total > budget) {
        throw BudgetExceeded(
            "k_enumerate: |K| = " + std::to_string(total) + " exceeds the budget of " + std::to_string(budget));
    }
    auto tables = special_torus_tables(p, m, budget);
    std::vector<KElement> out;
    out.reserve(total);
    for (int64_t b = 0; b < p; b++) {
        for (const auto &t : tables) {
            out.emplace_back(t, b, m);
        }
    }
    return out;
}

std::vector<KElement> k_generate(const std::vector<KElement> &gens) {
    if (gens.empty()) {
        throw std::invalid_argument("k_generate: empty generating set");
    }
    std::map<std::vector<int64_t>, KElement> seen;
    std::vector<KElement> frontier;
    KElement id = KElement::identity(gens[0].p(), gens[0].m);
    seen.emplace(id.key(), id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<KElement> next;
        for (const auto &e : frontier) {
            for (const auto &g : gens) {
                KElement h = k_mul(e, g);
                if (seen.emplace(h.key(), h).second) {
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<KElement> out;
    out.reserve(seen.size());
    for (auto &kv : seen) {
        out.push_back(kv.second);
    }
    return out;
}

namespace {

using Bits = std::vector<uint64_t>;

struct CliqueFinder {
    size_t n;
    std::vector<Bits> adj;
    std::vector<std::vector<size_t>> cliques;

    static bool empty(const Bits &s) {
        return std::all_of(s.begin(), s.end(), [](uint64_t w) { return w == 0; });
    }
    static size_t count(const Bits &s) {
        size_t c = 0;
        for (auto w : s) {
            c += __builtin_popcountll(w);
        }
        return c;
    }
    static Bits meet(const Bits &a, const Bits &b) {
        Bits r(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            r[i] = a[i] & b[i];
        }
        return r;
    }

    // Bron-Kerbosch with pivoting.
    void run(std::vector<size_t> &R, Bits P, Bits X) {
        if (empty(P) && empty(X)) {
            cliques.push_back(R);
            return;
        }
        size_t pivot = 0, best = 0;
        bool have = false;
        for (size_t u = 0; u < n; u++) {
            bool in = ((P[u / 64] | X[u / 64]) >> (u % 64)) & 1;
            if (!in) {
                continue;
            }
            size_t c = count(meet(P, adj[u]));
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        }
        for (size_t v = 0; v < n; v++) {
            bool inP = (P[v / 64] >> (v % 64)) & 1;
            bool nbr = (adj[pivot][v / 64] >> (v % 64)) & 1;
            if (!inP || nbr) {
                continue;
            }
            R.push_back(v);
            run(R, meet(P, adj[v]), meet(X, adj[v]));
            R.pop_back();
            P[v / 64] &= ~(uint64_t{1} << (v % 64));
            X[v / 64] |= uint64_t{1} << (v % 64);
        }
    }
};

bool is_omega_scalar(const KElement &e) {
    if (e.b != 0) {
        return false;
    }
    auto c = pf_constant_value(e.xi);
    return c && c->as_omega_power().has_value();
}

}  // namespace

SubgroupReport k_maximal_p_torsion_abelian(int64_t p, int m, int64_t budget) {
    auto all = k_enumerate(p, m, budget);
    SubgroupReport rep{};
    rep.p = p;
    rep.m = m;
    rep.group_order = static_cast<int64_t>(all.size());

    std::vector<KElement> tors;
    for (const auto &e : all) {
        if (k_is_p_torsion(e)) {
            tors.push_back(e);
        }
    }
    rep.torsion_count = static_cast<int64_t>(tors.size());

    CliqueFinder cf;
    cf.n = tors.size();
    size_t words = (cf.n + 63) / 64;
    cf.adj.assign(cf.n, Bits(words, 0));
    for (size_t i = 0; i < cf.n; i++) {
        for (size_t j = i + 1; j < cf.n; j++) {
            if (k_commutator(tors[i], tors[j]).is_identity()) {
                cf.adj[i][j / 64] |= uint64_t{1} << (j % 64);
                cf.adj[j][i / 64] |= uint64_t{1} << (i % 64);
            }
        }
    }
    Bits P(words, 0), X(words, 0);
    for (size_t i = 0; i < cf.n; i++) {
        P[i / 64] |= uint64_t{1} << (i % 64);
    }
    std::vector<size_t> R;
    cf.run(R, P, X);

    // Close each clique, then keep only sets not strictly contained in another.
    std::set<std::set<std::vector<int64_t>>> closed_keys;
    std::map<std::set<std::vector<int64_t>>, std::vector<KElement>> by_keys;
    for (const auto &clique : cf.cliques) {
        std::vector<KElement> gens;
        for (size_t i : clique) {
            gens.push_back(tors[i]);
        }
        auto group = k_generate(gens);
        std::set<std::vector<int64_t>> keys;
        for (const auto &g : group) {
            keys.insert(g.key());
        }
        by_keys.emplace(keys, group);
    }
    for (const auto &[keys, group] : by_keys) {
        bool contained = false;
        for (const auto &[other, _] : by_keys) {
            if (other.size() > keys.size() && std::includes(other.begin(), other.end(), keys.begin(), keys.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) {
            rep.subgroups.push_back(group);
        }
    }

    for (const auto &z : all) {
        bool central = std::all_of(all.begin(), all.end(), [&](const KElement &g) {
            return k_commutator(z, g).is_identity();
        });
        if (central) {
            rep.center.push_back(z);
        }
    }
    rep.center_is_omega = static_cast<int64_t>(rep.center.size()) == p &&
                          std::all_of(rep.center.begin(), rep.center.end(), is_omega_scalar);

    std::set<std::vector<int64_t>> torus_keys;
    for (const auto &e : all) {
        if (e.b == 0 && pf_value_level(e.xi) <= 1) {
            torus_keys.insert(e.key());
        }
    }
    bool all_classified = true;
    int torus_hits = 0;
    for (const auto &group : rep.subgroups) {
        std::set<std::vector<int64_t>> keys;
        for (const auto &g : group) {
            keys.insert(g.key());
        }
        if (keys == torus_keys) {
            rep.kinds.push_back("T_(p)");
            torus_hits++;
            continue;
        }
        bool cyclic_type = false;
        if (static_cast<int64_t>(group.size()) == p * p) {
            for (const auto &g : group) {
                if (g.b == 0) {
                    continue;
                }
                std::set<std::vector<int64_t>> span;
                for (int64_t k = 0; k < p; k++) {
                    for (int64_t j = 0; j < p; j++) {
                        span.insert(k_mul(KElement::scalar(p, m, k), k_pow(g, j)).key());
                    }
                }
                cyclic_type = span == keys;
                break;
            }
        }
        rep.kinds.push_back(cyclic_type ? "<w, S_xi X^b>" : "unclassified");
        all_classified = all_classified && cyclic_type;
    }
    rep.torus_is_maximal = torus_hits == 1;

    std::set<std::vector<int64_t>> center_keys;
    for (const auto &z : rep.center) {
        center_keys.insert(z.key());
    }
    rep.intersections_are_center = true;
    for (size_t i = 0; i < rep.subgroups.size(); i++) {
        for (size_t j = i + 1; j < rep.subgroups.size(); j++) {
            std::set<std::vector<int64_t>> a, b, both;
            for (const auto &g : rep.subgroups[i]) {
                a.insert(g.key());
            }
            for (const auto &g : rep.subgroups[j]) {
                b.insert(g.key());
            }
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.begin()));
            if (both != center_keys) {
                rep.intersections_are_center = false;
            }
        }
    }
    bool torus_ok = p == 2 ? torus_hits == 0 : torus_hits == 1;
    rep.classification_ok = all_classified && torus_ok && rep.center_is_omega && rep.intersections_are_center;
    return rep;
}

DihedralReport k_dihedral_check(int m) {
    if (m < 1) {
        throw std::invalid_argument("k_dihedral_check: m must be positive");
    }
    DihedralReport rep{};
    rep.m = m;
    int max_level = std::max(m, kDefaultMaxLevel);
    KElement r(PhaseFunction(2, {Phase(2, m, 1, max_level), Phase(2, m, -1, max_level)}), 0, m);
    KElement s = KElement::X(2, m);
    auto order = [](const KElement &g) {
        int64_t k = 1;
        KElement acc = g;
        while (!acc.is_identity()) {
            acc = k_mul(acc, g);
            k++;
        }
        return k;
    };
    rep.rotation_order = order(r);
    rep.reflection_order = order(s);
    rep.conjugation_inverts = k_mul(k_mul(s, r), s) == k_inv(r);
    rep.generated_order = static_cast<int64_t>(k_generate({r, s}).size());
    int64_t expect = ipow(2, m);
    rep.ok = rep.rotation_order == expect && rep.reflection_order == 2 && rep.conjugation_inverts &&
             rep.generated_order == 2 * expect;
    return rep;
}

}  // namespace lcsmbqc
