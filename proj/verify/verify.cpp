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


#include "lcsmbqc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

namespace {

struct Checker {
    PropertyResult r;

    explicit Checker(std::string name, std::string detail = "") {
        r.name = std::move(name);
        r.detail = std::move(detail);
    }

    template <typename F>
    bool check(bool ok, F describe) {
        r.checked++;
        if (!ok && r.pass) {
            r.pass = false;
            r.counterexample = describe();
        }
        return ok;
    }

    // Runs `body`, recording any exception as a failure of this property.
    void guard(const std::function<void()> &body) {
        try {
            body();
        } catch (const BudgetExceeded &) {
            throw;
        } catch (const std::exception &e) {
            r.pass = false;
            if (r.counterexample.empty()) {
                r.counterexample = std::string("exception: ") + e.what();
            }
        }
    }
};

std::string pair_str(const std::string &a, const std::string &b) {
    return a + " ; " + b;
}

// Diagonal element (xi, 0).
KElement diag(const PhaseFunction &xi, int m) {
    return KElement(xi, 0, m);
}

// prod_{i in [lo, hi)} (i b).xi
PhaseFunction shifted_product(const PhaseFunction &xi, int64_t b, int64_t lo, int64_t hi) {
    PhaseFunction acc = PhaseFunction::identity(xi.p);
    for (int64_t i = lo; i < hi; i++) {
        acc = pf_mul(acc, pf_act(i * b, xi));
    }
    return acc;
}

int64_t checked_count(int64_t base, int64_t exp) {
    int64_t r = 1;
    for (int64_t k = 0; k < exp; k++) {
        if (r > (int64_t{1} << 40) / std::max<int64_t>(base, 1)) {
            return int64_t{1} << 40;
        }
        r *= base;
    }
    return r;
}

int64_t group_order(int64_t p, int m) {
    return checked_count(p, m * (p - 1) + 1);
}

void require_odd(const VerifyConfig &cfg, const std::string &suite) {
    if (cfg.p == 2) {
        throw std::invalid_argument("verify " + suite + ": requires an odd prime");
    }
}

// Elements with scalar p-th power, one representative per coset of <w>.
std::vector<KElement> scalar_power_reps(const std::vector<KElement> &all) {
    std::vector<KElement> reps;
    std::set<std::vector<int64_t>> seen;
    for (const auto &M : all) {
        int64_t p = M.p();
        KElement P = k_pow(M, p);
        if (P.b != 0 || !pf_constant_value(P.xi)) {
            continue;
        }
        KElement best = M;
        for (int64_t j = 1; j < p; j++) {
            KElement W = k_mul(KElement::scalar(p, M.m, j), M);
            if (W.key() < best.key()) {
                best = W;
            }
        }
        if (seen.insert(best.key()).second) {
            reps.push_back(best);
        }
    }
    return reps;
}

// p-torsion tensors g.(R_{i_1} x ... x R_{i_n}) up to central scalars, with the site indices.
struct TorsionReps {
    std::vector<KElement> sites;
    std::vector<std::vector<std::optional<int64_t>>> comm;
    std::vector<TensorElement> elems;
    std::vector<std::vector<size_t>> index;
};

TorsionReps torsion_reps(int64_t p, int m, size_t n, int64_t budget) {
    int64_t order = group_order(p, m);
    if (order * order > budget) {
        throw BudgetExceeded("site commutator table of size " + std::to_string(order) + "^2 exceeds the budget");
    }
    TorsionReps t;
    t.sites = scalar_power_reps(k_enumerate(p, m, budget));
    size_t s = t.sites.size();
    t.comm.assign(s, std::vector<std::optional<int64_t>>(s));
    for (size_t i = 0; i < s; i++) {
        for (size_t j = 0; j < s; j++) {
            t.comm[i][j] = k_scalar_commutant(t.sites[i], t.sites[j]);
        }
    }
    if (checked_count(static_cast<int64_t>(s), static_cast<int64_t>(n)) * p > budget) {
        throw BudgetExceeded("torsion_reps: too many tensors");
    }
    std::vector<size_t> idx(n, 0);
    while (true) {
        std::vector<KElement> sites;
        for (auto i : idx) {
            sites.push_back(t.sites[i]);
        }
        for (int64_t k = 0; k < p; k++) {
            TensorElement E(Phase(p, 2, k), sites);
            if (t_is_p_torsion(E)) {
                t.elems.push_back(E);
                t.index.push_back(idx);
            }
        }
        size_t k = 0;
        while (k < n && ++idx[k] == s) {
            idx[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return t;
}

// Commutator exponent of two tensors from the site table, if scalar.
std::optional<int64_t> rep_commutant(const TorsionReps &t, size_t e, size_t f, int64_t p) {
    int64_t c = 0;
    for (size_t i = 0; i < t.index[e].size(); i++) {
        auto ci = t.comm[t.index[e][i]][t.index[f][i]];
        if (!ci) {
            return std::nullopt;
        }
        c += *ci;
    }
    return mod(c, p);
}

std::vector<HWElement> all_hw(int64_t p, size_t n) {
    std::vector<HWElement> out;
    int64_t count = checked_count(p, 2 * static_cast<int64_t>(n));
    for (int64_t c = 0; c < p; c++) {
        for (int64_t code = 0; code < count; code++) {
            std::vector<int64_t> a(n), b(n);
            int64_t r = code;
            for (size_t i = 0; i < n; i++) {
                a[i] = r % p;
                r /= p;
                b[i] = r % p;
                r /= p;
            }
            out.emplace_back(p, Phase::omega(p, c), a, b);
        }
    }
    return out;
}

//////////////////////////////////////////////////////////////////////////////
// lemma1

void suite_lemma1(const VerifyConfig &cfg, SuiteReport &rep) {
    auto all = k_enumerate(cfg.p, cfg.m, cfg.budget);
    int64_t nmax = checked_count(cfg.p, cfg.m);
    std::vector<KElement> diagonals;
    for (const auto &M : all) {
        if (M.b == 0) {
            diagonals.push_back(M);
        }
    }
    std::string range = "|K| = " + std::to_string(all.size()) + ", n in [0," + std::to_string(nmax) + "]";

    Checker pw("lemma1.power_closed_form", "k_pow and (prod (ib).xi, nb) vs iterated k_mul; " + range);
    pw.guard([&] {
        for (const auto &M : all) {
            KElement acc = KElement::identity(cfg.p, cfg.m);
            for (int64_t n = 0; n <= nmax; n++) {
                KElement lit(shifted_product(M.xi, M.b, 0, n), n * M.b, cfg.m);
                pw.check(k_pow(M, n) == acc && lit == acc, [&] { return M.str() + " n=" + std::to_string(n); });
                acc = k_mul(acc, M);
            }
            pw.check(k_mul(k_pow(M, -1), M).is_identity(), [&] { return M.str() + " n=-1"; });
        }
    });
    rep.properties.push_back(pw.r);

    Checker cj("lemma1.diagonal_conjugation", "M^n (chi,0) = ((nb).chi,0) M^n for all diagonal chi; " + range);
    cj.guard([&] {
        for (const auto &M : all) {
            for (int64_t n = 0; n <= nmax; n++) {
                KElement Mn = k_pow(M, n);
                for (const auto &C : diagonals) {
                    KElement rhs = k_mul(diag(pf_act(n * M.b, C.xi), cfg.m), Mn);
                    cj.check(k_mul(Mn, C) == rhs,
                             [&] { return pair_str(M.str(), C.str()) + " n=" + std::to_string(n); });
                }
            }
        }
    });
    rep.properties.push_back(cj.r);

    Checker tw("lemma1.twisted_power", "(M (chi,0))^n = (prod_{i=1..n} (ib).chi, 0) M^n; " + range);
    tw.guard([&] {
        for (const auto &M : all) {
            for (const auto &C : diagonals) {
                KElement MC = k_mul(M, C);
                KElement acc = KElement::identity(cfg.p, cfg.m);
                KElement Mn = KElement::identity(cfg.p, cfg.m);
                for (int64_t n = 0; n <= nmax; n++) {
                    KElement rhs = k_mul(diag(shifted_product(C.xi, M.b, 1, n + 1), cfg.m), Mn);
                    tw.check(acc == rhs, [&] { return pair_str(M.str(), C.str()) + " n=" + std::to_string(n); });
                    acc = k_mul(acc, MC);
                    Mn = k_mul(Mn, M);
                }
            }
        }
    });
    rep.properties.push_back(tw.r);

    Checker cm("lemma1.commutator_formula",
               "[M,N] = M N M^-1 N^-1 = (xi(q) xi'(q-b) xi^-1(q-b') xi'^-1(q), 0) for all pairs");
    cm.guard([&] {
        for (const auto &M : all) {
            KElement Mi = k_inv(M);
            for (const auto &N : all) {
                KElement direct = k_mul(k_mul(M, N), k_mul(Mi, k_inv(N)));
                PhaseFunction hat = pf_mul(pf_mul(M.xi, pf_act(M.b, N.xi)),
                                           pf_mul(pf_act(N.b, pf_inv(M.xi)), pf_inv(N.xi)));
                KElement got = k_commutator(M, N);
                cm.check(got == direct && got == diag(hat, cfg.m), [&] { return pair_str(M.str(), N.str()); });
            }
        }
    });
    rep.properties.push_back(cm.r);

    Checker ax("lemma1.group_axioms", "identity and inverses on all elements; associativity on random triples");
    ax.guard([&] {
        KElement I = KElement::identity(cfg.p, cfg.m);
        for (const auto &M : all) {
            ax.check(k_mul(M, I) == M && k_mul(I, M) == M && k_mul(M, k_inv(M)) == I, [&] { return M.str(); });
        }
        std::mt19937_64 rng(cfg.seed);
        int64_t triples = std::max<int64_t>(cfg.samples, 1000);
        for (int64_t t = 0; t < triples; t++) {
            const auto &A = all[rng() % all.size()];
            const auto &B = all[rng() % all.size()];
            const auto &C = all[rng() % all.size()];
            ax.check(k_mul(k_mul(A, B), C) == k_mul(A, k_mul(B, C)),
                     [&] { return A.str() + " ; " + B.str() + " ; " + C.str(); });
        }
    });
    rep.properties.push_back(ax.r);
}

//////////////////////////////////////////////////////////////////////////////
// torsion

void suite_torsion(const VerifyConfig &cfg, SuiteReport &rep) {
    auto all = k_enumerate(cfg.p, cfg.m, cfg.budget);

    Checker single("torsion.single_site", "M^p = 1 vs (b != 0 or level <= 1) over all of K");
    single.guard([&] {
        for (const auto &M : all) {
            single.check(k_is_p_torsion(M) == k_is_p_torsion_structural(M), [&] { return M.str(); });
        }
    });
    rep.properties.push_back(single.r);

    // Globals w^0..: one per coset of <w> among level-2 phases, plus a level-3 phase as a negative control.
    std::vector<Phase> globals;
    for (int64_t k = 0; k < cfg.p; k++) {
        globals.emplace_back(cfg.p, 2, k);
    }
    globals.emplace_back(cfg.p, 3, 1);

    for (size_t n = 1; n <= std::min<size_t>(cfg.n, 2); n++) {
        int64_t count = checked_count(static_cast<int64_t>(all.size()), static_cast<int64_t>(n)) *
                        static_cast<int64_t>(globals.size());
        std::string name = "torsion.tensor_n" + std::to_string(n);
        if (count > cfg.budget) {
            rep.skipped.push_back(name + ": " + std::to_string(count) + " tensors exceed the budget");
            continue;
        }
        Checker t(name, "E^p = 1 vs global/theta_{2,0} characterization over " + std::to_string(count) + " tensors");
        t.guard([&] {
            std::vector<size_t> idx(n, 0);
            while (true) {
                std::vector<KElement> sites;
                for (auto i : idx) {
                    sites.push_back(all[i]);
                }
                for (const auto &g : globals) {
                    TensorElement E(g, sites);
                    t.check(t_is_p_torsion(E) == t_is_p_torsion_structural(E), [&] { return E.str(); });
                }
                size_t k = 0;
                while (k < n && ++idx[k] == all.size()) {
                    idx[k++] = 0;
                }
                if (k == n) {
                    break;
                }
            }
        });
        rep.properties.push_back(t.r);
    }
    if (cfg.n > 2) {
        rep.skipped.push_back("torsion.tensor_n" + std::to_string(cfg.n) + ": exhaustive tensors run for n <= 2");
    }
}

//////////////////////////////////////////////////////////////////////////////
// commuting-pairs

int expected_case(const KElement &M, const KElement &N) {
    if (M.b == 0 && N.b == 0) {
        return 1;
    }
    return M.b == 0 || N.b == 0 ? 2 : 3;
}

void suite_commuting_pairs(const VerifyConfig &cfg, SuiteReport &rep) {
    require_odd(cfg, "commuting-pairs");
    int64_t order = group_order(cfg.p, cfg.m);
    if (order * order <= cfg.budget) {
        auto all = k_enumerate(cfg.p, cfg.m, cfg.budget);
        Checker ex("commuting_pairs.exhaustive", "every scalar-commuting pair of K classified with verified witnesses");
        ex.guard([&] {
            for (const auto &M : all) {
                for (const auto &N : all) {
                    if (!k_scalar_commutant(M, N)) {
                        continue;
                    }
                    auto c = k_classify_commuting_pair(M, N);
                    ex.check(c.which == expected_case(M, N), [&] { return pair_str(M.str(), N.str()); });
                }
            }
        });
        rep.properties.push_back(ex.r);
    } else {
        rep.skipped.push_back("commuting_pairs.exhaustive: |K|^2 = " + std::to_string(order) + "^2 exceeds the budget");
    }

    if (cfg.samples > 0) {
        PairSampler sampler(cfg.p, cfg.m, cfg.seed);
        Checker rnd("commuting_pairs.random", std::to_string(cfg.samples) + " seeded scalar-commuting pairs");
        rnd.guard([&] {
            for (int64_t t = 0; t < cfg.samples; t++) {
                auto [M, N] = sampler.site_pair(std::nullopt, false);
                auto c = k_classify_commuting_pair(M, N);
                rnd.check(c.which == expected_case(M, N), [&] { return pair_str(M.str(), N.str()); });
            }
        });
        rep.properties.push_back(rnd.r);
    }
}

//////////////////////////////////////////////////////////////////////////////
// subgroups

void suite_subgroups(const VerifyConfig &cfg, SuiteReport &rep) {
    auto describe = [](const SubgroupReport &s) {
        std::ostringstream out;
        out << "p=" << s.p << " m=" << s.m << " |K|=" << s.group_order << " torsion=" << s.torsion_count
            << " subgroups=" << s.subgroups.size();
        return out.str();
    };

    auto main = k_maximal_p_torsion_abelian(cfg.p, cfg.m, cfg.budget);
    Checker cls("subgroups.classification", describe(main));
    if (cfg.p == 2) {
        cls.check(main.classification_ok && main.center_is_omega && main.intersections_are_center,
                  [&] { return to_json(main).dump(); });
    } else {
        int tori = 0;
        bool orders = true;
        for (size_t i = 0; i < main.subgroups.size(); i++) {
            tori += main.kinds[i] == "T_(p)";
            orders &= static_cast<int64_t>(main.subgroups[i].size()) == cfg.p * cfg.p;
        }
        cls.check(main.classification_ok && main.center_is_omega && main.intersections_are_center &&
                      main.torus_is_maximal && tori == 1 && orders,
                  [&] { return to_json(main).dump(); });
    }
    rep.properties.push_back(cls.r);

    for (int m : {2, 3}) {
        auto even = k_maximal_p_torsion_abelian(2, m, cfg.budget);
        Checker ev("subgroups.even_prime_m" + std::to_string(m), describe(even) + "; center {+1,-1}");
        ev.check(even.classification_ok && even.center_is_omega && even.intersections_are_center &&
                     even.center.size() == 2,
                 [&] { return to_json(even).dump(); });
        rep.properties.push_back(ev.r);
    }

    Checker dh("subgroups.dihedral", "r^{2^m} = s^2 = 1, srs = r^-1, order 2^{m+1} for m = 1, 2, 3");
    for (int m : {1, 2, 3}) {
        auto d = k_dihedral_check(m);
        dh.check(d.ok && d.generated_order == (int64_t{2} << m), [&] { return to_json(d).dump(); });
    }
    rep.properties.push_back(dh.r);
}

//////////////////////////////////////////////////////////////////////////////
// decomposition

PhaseFunction table_from_code(int64_t p, int level, int64_t code) {
    int64_t base = checked_count(p, level);
    std::vector<Phase> values;
    for (int64_t q = 0; q < p; q++) {
        values.emplace_back(p, level, code % base);
        code /= base;
    }
    return PhaseFunction(p, values);
}

void suite_decomposition(const VerifyConfig &cfg, SuiteReport &rep) {
    int64_t count = checked_count(checked_count(cfg.p, cfg.m), cfg.p);
    if (count <= cfg.budget) {
        Checker ex("decomposition.exhaustive",
                   "round trip and injectivity over all " + std::to_string(count) + " level-" +
                       std::to_string(cfg.m) + " tables");
        ex.guard([&] {
            std::set<std::vector<std::vector<int64_t>>> images;
            for (int64_t code = 0; code < count; code++) {
                PhaseFunction x = table_from_code(cfg.p, cfg.m, code);
                auto th = pf_decompose(x, cfg.m);
                images.insert(th.theta);
                ex.check(pf_reconstruct(th) == x, [&] { return "table code " + std::to_string(code); });
            }
            ex.check(static_cast<int64_t>(images.size()) == count, [&] {
                return std::to_string(images.size()) + " distinct coefficient sets for " + std::to_string(count) +
                       " tables";
            });
        });
        rep.properties.push_back(ex.r);
    } else {
        rep.skipped.push_back("decomposition.exhaustive: " + std::to_string(count) + " tables exceed the budget");
    }

    if (cfg.samples > 0) {
        int64_t n = std::max<int64_t>(cfg.samples / 10, 1000);
        int level = std::max(cfg.m, 2);
        Checker rnd("decomposition.random",
                    std::to_string(n) + " seeded level-" + std::to_string(level) + " tables at p=" +
                        std::to_string(cfg.p));
        rnd.guard([&] {
            std::mt19937_64 rng(cfg.seed);
            int64_t base = checked_count(cfg.p, level);
            std::set<std::vector<int64_t>> tables;
            std::set<std::vector<std::vector<int64_t>>> images;
            for (int64_t t = 0; t < n; t++) {
                std::vector<Phase> values;
                std::vector<int64_t> key;
                for (int64_t q = 0; q < cfg.p; q++) {
                    int64_t e = static_cast<int64_t>(rng() % static_cast<uint64_t>(base));
                    values.emplace_back(cfg.p, level, e);
                    key.push_back(e);
                }
                PhaseFunction x(cfg.p, values);
                auto th = pf_decompose(x, level);
                tables.insert(key);
                images.insert(th.theta);
                rnd.check(pf_reconstruct(th) == x, [&] { return to_json(x).dump(); });
            }
            rnd.check(images.size() == tables.size(), [&] { return std::string("coefficient collision"); });
        });
        rep.properties.push_back(rnd.r);
    }
}

//////////////////////////////////////////////////////////////////////////////
// phi

void check_homomorphism(Checker &ch, const TensorElement &E, const TensorElement &F, PhiVariant v) {
    HWElement lhs = phi(t_mul(E, F), v);
    HWElement rhs = hw_mul(phi(E, v), phi(F, v));
    ch.check(lhs == rhs, [&] { return pair_str(E.str(), F.str()) + " : " + lhs.str() + " != " + rhs.str(); });
}

void suite_phi(const VerifyConfig &cfg, SuiteReport &rep) {
    require_odd(cfg, "phi");
    PhiVariant v = cfg.variant;
    std::string vname = phi_variant_name(v);

    for (size_t n = 1; n <= std::min<size_t>(cfg.n, 2); n++) {
        std::string suffix = "_n" + std::to_string(n);
        TorsionReps t;
        try {
            t = torsion_reps(cfg.p, cfg.m, n, cfg.budget);
        } catch (const BudgetExceeded &e) {
            rep.skipped.push_back("phi.exhaustive" + suffix + ": " + e.what());
            continue;
        }
        int64_t pairs = static_cast<int64_t>(t.elems.size()) * static_cast<int64_t>(t.elems.size());
        if (pairs > 10 * cfg.budget) {
            rep.skipped.push_back("phi.exhaustive" + suffix + ": " + std::to_string(pairs) + " pairs exceed the budget");
            continue;
        }
        std::string scope = std::to_string(t.elems.size()) + " torsion tensors up to central scalars";

        std::vector<HWElement> images;
        Checker tp("phi.torsion_preservation" + suffix, "phi(E)^p = 1; " + scope);
        Checker cp("phi.center_preservation" + suffix, "phi(w^c E) = w^c phi(E) for all level-2 globals; " + scope);
        tp.guard([&] {
            for (const auto &E : t.elems) {
                images.push_back(phi(E, v));
                tp.check(hw_pow(images.back(), cfg.p).is_identity(), [&] { return E.str(); });
            }
        });
        cp.guard([&] {
            for (size_t e = 0; e < t.elems.size(); e++) {
                for (int64_t c = 1; c < cfg.p; c++) {
                    TensorElement W(t.elems[e].global * Phase::omega(cfg.p, c), t.elems[e].sites);
                    HWElement want = images[e];
                    want.c *= Phase::omega(cfg.p, c);
                    cp.check(phi(W, v) == want, [&] { return W.str(); });
                }
            }
            HWElement one = phi(TensorElement::scalar(cfg.p, cfg.m, n, 1), v);
            cp.check(one == HWElement(cfg.p, Phase::omega(cfg.p), std::vector<int64_t>(n, 0),
                                      std::vector<int64_t>(n, 0)),
                     [&] { return "phi(w 1) = " + one.str(); });
        });

        Checker hm("phi.homomorphism" + suffix,
                   "phi(EE') = phi(E)phi(E') on every commuting pair, variant " + vname + "; " + scope);
        Checker cc("phi.commutator_preservation" + suffix,
                   "hw_commutator(phi E, phi E') = commutator exponent on scalar-commuting pairs; " + scope);
        hm.guard([&] {
            for (size_t e = 0; e < t.elems.size(); e++) {
                for (size_t f = 0; f < t.elems.size(); f++) {
                    auto c = rep_commutant(t, e, f, cfg.p);
                    if (!c) {
                        continue;
                    }
                    cc.check(hw_commutator(images[e], images[f]) == *c,
                             [&] { return pair_str(t.elems[e].str(), t.elems[f].str()); });
                    if (*c == 0) {
                        check_homomorphism(hm, t.elems[e], t.elems[f], v);
                    }
                }
            }
        });
        for (auto *ch : {&hm, &cc, &tp, &cp}) {
            rep.properties.push_back(ch->r);
        }
    }

    if (cfg.samples > 0) {
        PairSampler sampler(cfg.p, cfg.m, cfg.seed);
        Checker rnd("phi.homomorphism_random",
                    std::to_string(cfg.samples) + " seeded commuting torsion pairs, n in {1,2,3}, variant " + vname);
        Checker rcc("phi.commutator_preservation_random",
                    std::to_string(cfg.samples) + " seeded scalar-commuting torsion pairs, n in {1,2,3}");
        rnd.guard([&] {
            for (int64_t s = 0; s < cfg.samples; s++) {
                size_t n = 1 + static_cast<size_t>(s % 3);
                auto [E, F] = sampler.commuting_torsion_pair(n);
                rnd.check(t_commute(E, F) && t_is_p_torsion(E) && t_is_p_torsion(F),
                          [&] { return "generator produced " + pair_str(E.str(), F.str()); });
                check_homomorphism(rnd, E, F, v);
            }
        });
        rcc.guard([&] {
            for (int64_t s = 0; s < cfg.samples; s++) {
                size_t n = 1 + static_cast<size_t>(s % 3);
                auto [E, F] = sampler.scalar_commuting_pair(n, true);
                auto c = t_commutator_exponent(E, F);
                rcc.check(c && *c == hw_commutator(phi(E, v), phi(F, v)),
                          [&] { return pair_str(E.str(), F.str()); });
            }
        });
        rep.properties.push_back(rnd.r);
        rep.properties.push_back(rcc.r);
    }

    for (size_t n = 1; n <= 2; n++) {
        std::string suffix = "_n" + std::to_string(n);
        auto hs = all_hw(cfg.p, n);
        int64_t pairs = static_cast<int64_t>(hs.size()) * static_cast<int64_t>(hs.size());
        if (pairs > cfg.budget) {
            rep.skipped.push_back("phi.nu_additive" + suffix + ": " + std::to_string(pairs) + " pairs exceed the budget");
            continue;
        }
        Checker nu("phi.nu_additive" + suffix, "nu(hh') = nu(h) + nu(h') on all commuting pairs of H(Z_p)^n");
        for (const auto &h : hs) {
            for (const auto &g : hs) {
                if (hw_commutator(h, g) != 0) {
                    continue;
                }
                nu.check(value_map_nu(hw_mul(h, g)) == mod(value_map_nu(h) + value_map_nu(g), cfg.p),
                         [&] { return pair_str(h.str(), g.str()); });
            }
        }
        for (int64_t c = 0; c < cfg.p; c++) {
            HWElement w(cfg.p, Phase::omega(cfg.p, c), std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0));
            nu.check(value_map_nu(w) == c, [&] { return "nu(" + w.str() + ")"; });
        }
        rep.properties.push_back(nu.r);
    }

    // Qutrit pair E = M1 x M2 with M1 = w^{q^2} cbrt(w), M2 = M1^2, against E^2.
    auto site = [](std::vector<int64_t> nums) {
        std::vector<Phase> vals;
        for (auto k : nums) {
            vals.emplace_back(3, 2, k);
        }
        return KElement(PhaseFunction(3, vals), 0, 2);
    };
    TensorElement E(Phase::one(3), {site({1, 4, 4}), site({2, 8, 8})});
    TensorElement E2 = t_mul(E, E);
    auto discrepancy = [&](PhiVariant var) {
        return hw_mul(phi(E2, var), hw_inv(hw_mul(phi(E, var), phi(E, var))));
    };
    Checker naive("phi.remark_naive_breaks", "naive variant on (E, E): phi(E^2) = w phi(E)^2");
    naive.guard([&] {
        HWElement d = discrepancy(PhiVariant::kNaive);
        naive.check(d == HWElement(3, Phase::omega(3), {0, 0}, {0, 0}), [&] { return "discrepancy " + d.str(); });
    });
    Checker disp("phi.remark_displayed_breaks", "displayed variant on (E, E) is not multiplicative");
    disp.guard([&] {
        HWElement d = discrepancy(PhiVariant::kDisplayed);
        disp.check(!d.is_identity(), [&] { return std::string("displayed variant is multiplicative on the pair"); });
    });
    Checker prf("phi.remark_proof_holds", "proof variant on (E, E) is multiplicative");
    prf.guard([&] {
        HWElement d = discrepancy(PhiVariant::kProof);
        prf.check(d.is_identity(), [&] { return "discrepancy " + d.str(); });
    });
    rep.properties.push_back(naive.r);
    rep.properties.push_back(disp.r);
    rep.properties.push_back(prf.r);
}

//////////////////////////////////////////////////////////////////////////////
// symplectic

void suite_symplectic(const VerifyConfig &cfg, SuiteReport &rep) {
    require_odd(cfg, "symplectic");
    int64_t order = group_order(cfg.p, cfg.m);
    if (order * order <= cfg.budget) {
        auto all = k_enumerate(cfg.p, cfg.m, cfg.budget);
        Checker ex("symplectic.exhaustive_n1", "every scalar-commuting pair of K, n = 1");
        ex.guard([&] {
            for (const auto &A : all) {
                TensorElement E = TensorElement::local(1, 0, A);
                auto vE = t_symplectic_vector(E);
                for (const auto &B : all) {
                    if (!k_scalar_commutant(A, B)) {
                        continue;
                    }
                    TensorElement F = TensorElement::local(1, 0, B);
                    auto c = t_commutator_exponent(E, F);
                    ex.check(c && *c == symplectic_form(vE, t_symplectic_vector(F), cfg.p),
                             [&] { return pair_str(A.str(), B.str()); });
                }
            }
        });
        rep.properties.push_back(ex.r);
    } else {
        rep.skipped.push_back("symplectic.exhaustive_n1: |K|^2 exceeds the budget");
    }

    if (cfg.samples > 0) {
        PairSampler sampler(cfg.p, cfg.m, cfg.seed);
        Checker rnd("symplectic.random", std::to_string(cfg.samples) + " seeded scalar-commuting pairs, n in {2,3}");
        rnd.guard([&] {
            for (int64_t s = 0; s < cfg.samples; s++) {
                size_t n = 2 + static_cast<size_t>(s % 2);
                auto [E, F] = sampler.scalar_commuting_pair(n, false);
                auto c = t_commutator_exponent(E, F);
                rnd.check(c && *c == symplectic_form(t_symplectic_vector(E), t_symplectic_vector(F), cfg.p),
                          [&] { return pair_str(E.str(), F.str()); });
            }
        });
        rep.properties.push_back(rnd.r);

        Checker iso("symplectic.isotropy", "commuting torsion families are isotropic; non-commuting ones are not");
        iso.guard([&] {
            int64_t families = std::max<int64_t>(cfg.samples / 10, 100);
            for (int64_t s = 0; s < families; s++) {
                size_t n = 1 + static_cast<size_t>(s % 3);
                auto [E, F] = sampler.commuting_torsion_pair(n);
                TensorElement G = t_mul(E, F);
                std::vector<SymplecticVector> vs{t_symplectic_vector(E), t_symplectic_vector(F),
                                                 t_symplectic_vector(G)};
                iso.check(is_isotropic(vs, cfg.p), [&] { return pair_str(E.str(), F.str()); });
                auto [A, B] = sampler.scalar_commuting_pair(n, true);
                bool commute = t_commute(A, B);
                iso.check(commute == is_isotropic({t_symplectic_vector(A), t_symplectic_vector(B)}, cfg.p),
                          [&] { return pair_str(A.str(), B.str()); });
            }
        });
        rep.properties.push_back(iso.r);
    }
}

//////////////////////////////////////////////////////////////////////////////
// pipeline

void check_pipeline(Checker &ch, const std::vector<TensorElement> &gens, int64_t budget) {
    LCS s = relation_lcs(gens, budget);
    GeneratorAssignment g(gens);
    auto sol = check_solution_conditions(s, g);
    if (!ch.check(sol.quantum_solution(), [&] { return "family is not a quantum solution: " + gens[0].str(); })) {
        return;
    }
    auto red = reduce_to_classical(s, g);
    ch.check(red.classical_ok && red.image_conditions.all() && check_classical(s, red.x), [&] {
        std::string out = "reduction failed for generators:";
        for (const auto &e : gens) {
            out += " " + e.str();
        }
        return out;
    });
}

void suite_pipeline(const VerifyConfig &cfg, SuiteReport &rep) {
    require_odd(cfg, "pipeline");
    PairSampler sampler(cfg.p, cfg.m, cfg.seed);
    int64_t families = std::max<int64_t>(cfg.samples / 100, 50);
    int64_t p = cfg.p;
    size_t n = std::max<size_t>(cfg.n, 1);

    Checker ab("pipeline.abelian_classes",
               std::to_string(families) + " families drawn per site from T_(p) or <w, S_xi X^b>, n=" +
                   std::to_string(n));
    ab.guard([&] {
        for (int64_t f = 0; f < families; f++) {
            std::vector<int> torus(n);
            std::vector<KElement> shift;
            for (size_t i = 0; i < n; i++) {
                torus[i] = static_cast<int>(sampler.uniform(2));
                shift.push_back(sampler.random_shift());
            }
            std::vector<TensorElement> gens;
            size_t k = 2 + static_cast<size_t>(f % 3);
            for (size_t t = 0; t < k; t++) {
                std::vector<KElement> sites;
                for (size_t i = 0; i < n; i++) {
                    if (torus[i]) {
                        bool deep = sampler.uniform(3) == 0;
                        sites.push_back(diag(deep ? sampler.random_deep_constant() : sampler.random_torus_p(), cfg.m));
                    } else {
                        sites.push_back(k_mul(KElement::scalar(p, cfg.m, sampler.uniform(p)),
                                              k_pow(shift[i], sampler.uniform(p))));
                    }
                }
                gens.push_back(sampler.with_torsion_global(sites));
            }
            check_pipeline(ab, gens, cfg.budget);
        }
    });
    rep.properties.push_back(ab.r);

    Checker cn("pipeline.cancelling_pairs",
               std::to_string(families) + " families {E, E', EE', w^r} with site commutators summing to 0");
    cn.guard([&] {
        for (int64_t f = 0; f < families; f++) {
            size_t nn = 1 + static_cast<size_t>(f % 3);
            auto [E, F] = sampler.commuting_torsion_pair(nn);
            std::vector<TensorElement> gens{E, F, t_mul(E, F), TensorElement::scalar(p, cfg.m, nn, sampler.uniform(p))};
            check_pipeline(cn, gens, cfg.budget);
        }
    });
    rep.properties.push_back(cn.r);

    Checker lf("pipeline.classical_lifts",
               std::to_string(families) + " random solvable systems: every classical solution lifts and reduces back");
    lf.guard([&] {
        std::mt19937_64 rng(cfg.seed);
        for (int64_t f = 0; f < families; f++) {
            size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            std::vector<std::vector<int64_t>> A(rows, std::vector<int64_t>(cols));
            std::vector<int64_t> x0(cols), b(rows, 0);
            for (auto &v : x0) {
                v = static_cast<int64_t>(rng() % p);
            }
            for (size_t r = 0; r < rows; r++) {
                for (size_t c = 0; c < cols; c++) {
                    A[r][c] = static_cast<int64_t>(rng() % p);
                    b[r] = mod(b[r] + A[r][c] * x0[c], p);
                }
            }
            LCS s(p, A, b);
            auto x = solve_classical(s);
            if (!lf.check(x.has_value(), [&] { return to_json(s).dump(); })) {
                continue;
            }
            for (const auto &sol : {*x, x0}) {
                auto g = classical_lift(sol, p, cfg.m, n);
                auto rep2 = check_solution_conditions(s, g);
                auto red = reduce_to_classical(s, g);
                lf.check(rep2.quantum_solution() && red.classical_ok && red.x == sol,
                         [&] { return to_json(s).dump(); });
            }
        }
    });
    rep.properties.push_back(lf.r);
}

//////////////////////////////////////////////////////////////////////////////
// even-prime

void suite_even_prime(const VerifyConfig &cfg, SuiteReport &rep) {
    (void)cfg;
    auto ex = even_prime_counterexample();
    Checker e("even_prime.example", "M^2 = N^2 = 1, [M,N] = 1, MN = -1, phi(MN) = -1 != 1 = phi(M)phi(N)");
    e.check(ex.M_squared_identity && ex.N_squared_identity && ex.commute && ex.MN_is_minus_one &&
                ex.homomorphism_fails && ex.phi_M_phi_N.is_identity() && ex.phi_MN.c == Phase(2, 1, 1) &&
                ex.phi_MN == HWElement(2, Phase(2, 1, 1), {0}, {0}),
            [&] { return to_json(ex).dump(); });
    rep.properties.push_back(e.r);

    auto fx = mermin_fixtures();
    Checker sq("even_prime.mermin_square_solution", "the Mermin-Peres operator assignment passes all three conditions");
    sq.guard([&] {
        auto s = check_solution_conditions(fx.square, fx.square_assignment);
        sq.check(s.quantum_solution(), [&] { return to_json(s).dump(); });
        sq.check(!solve_classical(fx.square).has_value(), [&] { return std::string("classical solution found"); });
    });
    rep.properties.push_back(sq.r);

    Checker rf("even_prime.reduction_refused", "reduce_to_classical rejects d = 2");
    bool refused = false;
    try {
        reduce_to_classical(fx.square, fx.square_assignment);
    } catch (const std::invalid_argument &) {
        refused = true;
    }
    rf.check(refused, [] { return std::string("reduction ran at d = 2"); });
    rep.properties.push_back(rf.r);

    Checker ct("even_prime.center", "K_{T_(4)}(2) and K_{T_(8)}(2): maximal abelian subgroups meet at {+1,-1}");
    for (int m : {2, 3}) {
        auto s = k_maximal_p_torsion_abelian(2, m, cfg.budget);
        ct.check(s.center_is_omega && s.center.size() == 2 && s.intersections_are_center,
                 [&] { return to_json(s).dump(); });
    }
    rep.properties.push_back(ct.r);
}

}  // namespace

//////////////////////////////////////////////////////////////////////////////
// PairSampler

PairSampler::PairSampler(int64_t p, int m, uint64_t seed) : p_(p), m_(std::max(m, 2)), rng_(seed) {
    if (!is_prime(p) || p == 2) {
        throw std::invalid_argument("PairSampler: requires an odd prime");
    }
}

int64_t PairSampler::uniform(int64_t n) {
    return static_cast<int64_t>(rng_() % static_cast<uint64_t>(n));
}

PhaseFunction PairSampler::random_torus() {
    int64_t base = checked_count(p_, m_);
    std::vector<Phase> values;
    Phase prod = Phase::one(p_);
    for (int64_t q = 0; q + 1 < p_; q++) {
        values.emplace_back(p_, m_, uniform(base));
        prod *= values.back();
    }
    values.push_back(prod.inverse());
    return PhaseFunction(p_, values);
}

PhaseFunction PairSampler::random_torus_p() {
    std::vector<Phase> values;
    int64_t sum = 0;
    for (int64_t q = 0; q + 1 < p_; q++) {
        int64_t f = uniform(p_);
        sum += f;
        values.push_back(Phase::omega(p_, f));
    }
    values.push_back(Phase::omega(p_, -sum));
    return PhaseFunction(p_, values);
}

PhaseFunction PairSampler::random_deep_constant() {
    int64_t t = uniform(p_);
    std::vector<Phase> values;
    int64_t sum = 0;
    for (int64_t q = 0; q + 1 < p_; q++) {
        int64_t f = uniform(p_);
        sum += f;
        values.emplace_back(p_, 2, t + p_ * f);
    }
    values.emplace_back(p_, 2, t + p_ * mod(-t - sum, p_));
    return PhaseFunction(p_, values);
}

KElement PairSampler::random_shift() {
    return KElement(random_torus(), 1 + uniform(p_ - 1), m_);
}

std::pair<KElement, KElement> PairSampler::site_pair(std::optional<int64_t> target, bool torsion_ready) {
    bool swap = uniform(2) == 1;
    std::optional<int64_t> want;
    if (target) {
        want = mod(swap ? -*target : *target, p_);
    }
    int kind = static_cast<int>(uniform(3)) + 1;
    if (want && *want != 0 && kind == 1) {
        kind = 2 + static_cast<int>(uniform(2));
    }
    std::optional<std::pair<KElement, KElement>> out;
    if (kind == 1) {
        auto pick = [&]() {
            if (torsion_ready) {
                return uniform(2) ? random_deep_constant() : random_torus_p();
            }
            return random_torus();
        };
        out.emplace(KElement(pick(), 0, m_), KElement(pick(), 0, m_));
    } else if (kind == 2) {
        KElement M = random_shift();
        int64_t s = want ? mod(-*want * inv_mod(M.b, p_), p_) : uniform(p_);
        int64_t coeffs[] = {uniform(p_), s};
        out.emplace(M, KElement(PhaseFunction::omega_poly(p_, coeffs), 0, m_));
    } else {
        KElement M = random_shift();
        int64_t y = 1 + uniform(p_ - 1);
        int64_t a = uniform(p_);
        int64_t start = uniform(p_);
        for (int64_t k = 0; k < p_ && !out; k++) {
            int64_t cp = mod(start + k, p_);
            int64_t coeffs[] = {0, cp};
            KElement chi(PhaseFunction::omega_poly(p_, coeffs), 0, m_);
            KElement N = k_mul(KElement::scalar(p_, m_, a), k_pow(k_mul(M, chi), y));
            auto c = k_scalar_commutant(M, N);
            if (c && (!want || *c == *want)) {
                out.emplace(M, N);
            }
        }
        if (!out) {
            return site_pair(target, torsion_ready);
        }
    }
    auto [M, N] = *out;
    if (swap) {
        std::swap(M, N);
    }
    auto c = k_scalar_commutant(M, N);
    if (!c || (target && *c != mod(*target, p_))) {
        throw std::logic_error("PairSampler: constructed pair " + pair_str(M.str(), N.str()) +
                               " does not have the requested commutator");
    }
    return {M, N};
}

TensorElement PairSampler::with_torsion_global(std::vector<KElement> sites) {
    TensorElement E0(Phase::one(p_), sites);
    auto s = t_pow(E0, p_).as_scalar();
    if (!s) {
        throw std::logic_error("PairSampler: p-th power of " + E0.str() + " is not scalar");
    }
    int64_t u = s->num_at_level(1);
    return TensorElement(Phase(p_, 2, -u) * Phase::omega(p_, uniform(p_)), std::move(sites));
}

std::pair<TensorElement, TensorElement> PairSampler::commuting_torsion_pair(size_t n) {
    std::vector<KElement> a, b;
    int64_t total = 0;
    for (size_t i = 0; i + 1 < n; i++) {
        auto [M, N] = site_pair(std::nullopt, true);
        total += *k_scalar_commutant(M, N);
        a.push_back(M);
        b.push_back(N);
    }
    auto [M, N] = site_pair(mod(-total, p_), true);
    a.push_back(M);
    b.push_back(N);
    return {with_torsion_global(a), with_torsion_global(b)};
}

std::pair<TensorElement, TensorElement> PairSampler::scalar_commuting_pair(size_t n, bool torsion_ready) {
    std::vector<KElement> a, b;
    for (size_t i = 0; i < n; i++) {
        auto [M, N] = site_pair(std::nullopt, torsion_ready);
        a.push_back(M);
        b.push_back(N);
    }
    if (torsion_ready) {
        return {with_torsion_global(a), with_torsion_global(b)};
    }
    return {TensorElement(Phase(p_, 2, uniform(p_ * p_)), a), TensorElement(Phase(p_, 2, uniform(p_ * p_)), b)};
}

//////////////////////////////////////////////////////////////////////////////
// Reports

bool SuiteReport::pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto &r) { return r.pass; });
}

const PropertyResult &SuiteReport::property(const std::string &name) const {
    for (const auto &r : properties) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range("SuiteReport: no property " + name);
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"lemma1", "torsion", "commuting-pairs", "subgroups", "decomposition",
                                                "phi",    "symplectic", "pipeline", "even-prime"};
    return names;
}

SuiteReport run_suite(const std::string &suite, const VerifyConfig &cfg) {
    if (!is_prime(cfg.p)) {
        throw std::invalid_argument("verify: p must be prime");
    }
    if (cfg.m < 1 || cfg.n < 1 || cfg.budget <= 0 || cfg.samples < 0) {
        throw std::invalid_argument("verify: m, n and budget must be positive");
    }
    static const std::map<std::string, std::function<void(const VerifyConfig &, SuiteReport &)>> table{
        {"lemma1", suite_lemma1},
        {"torsion", suite_torsion},
        {"commuting-pairs", suite_commuting_pairs},
        {"subgroups", suite_subgroups},
        {"decomposition", suite_decomposition},
        {"phi", suite_phi},
        {"symplectic", suite_symplectic},
        {"pipeline", suite_pipeline},
        {"even-prime", suite_even_prime},
    };
    auto it = table.find(suite);
    if (it == table.end()) {
        throw std::invalid_argument("verify: unknown suite \"" + suite + "\"");
    }
    SuiteReport rep;
    rep.suite = suite;
    rep.config = cfg;
    it->second(cfg, rep);
    std::sort(rep.properties.begin(), rep.properties.end(),
              [](const auto &a, const auto &b) { return a.name < b.name; });
    return rep;
}

json to_json(const VerifyConfig &x) {
    return json{{"p", x.p},           {"m", x.m},           {"n", x.n},
                {"variant", phi_variant_name(x.variant)}, {"budget", x.budget}, {"seed", x.seed},
                {"samples", x.samples}};
}

json to_json(const PropertyResult &x) {
    json out{{"name", x.name}, {"pass", x.pass}, {"checked", x.checked}, {"detail", x.detail}};
    if (!x.pass) {
        out["counterexample"] = x.counterexample;
    }
    return out;
}

json to_json(const SuiteReport &x) {
    json props = json::array();
    for (const auto &r : x.properties) {
        props.push_back(to_json(r));
    }
    return json{{"suite", x.suite},
                {"config", to_json(x.config)},
                {"pass", x.pass()},
                {"properties", props},
                {"skipped", x.skipped}};
}

}  // namespace lcsmbqc
