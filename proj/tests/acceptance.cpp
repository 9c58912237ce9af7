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


// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "lcsmbqc/verify.hpp"

using namespace lcsmbqc;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// Independent exhaustive count of classical solutions.
int64_t brute_force_count(const LCS &s) {
    int64_t total = 1;
    for (size_t j = 0; j < s.cols(); j++) {
        total *= s.d;
    }
    int64_t count = 0;
    for (int64_t code = 0; code < total; code++) {
        std::vector<int64_t> x(s.cols());
        int64_t r = code;
        for (auto &v : x) {
            v = r % s.d;
            r /= s.d;
        }
        bool ok = true;
        for (size_t i = 0; i < s.rows() && ok; i++) {
            int64_t acc = 0;
            for (size_t j = 0; j < s.cols(); j++) {
                acc += s.A[i][j] * x[j];
            }
            ok = (acc - s.b[i]) % s.d == 0;
        }
        count += ok;
    }
    return count;
}

std::string failed_properties(const SuiteReport &rep) {
    std::string out;
    for (const auto &r : rep.properties) {
        if (!r.pass) {
            out += " " + r.name + " [" + r.counterexample.substr(0, 200) + "]";
        }
    }
    return out;
}

int64_t total_checks(const SuiteReport &rep) {
    int64_t n = 0;
    for (const auto &r : rep.properties) {
        n += r.checked;
    }
    return n;
}

Outcome suite_outcome(const std::vector<SuiteReport> &reps, const std::vector<std::string> &required) {
    bool pass = true;
    std::ostringstream out;
    for (const auto &rep : reps) {
        pass &= rep.pass();
        out << rep.suite << "(p=" << rep.config.p << ",m=" << rep.config.m << ",n=" << rep.config.n
            << "): " << rep.properties.size() << " properties, " << total_checks(rep) << " checks;";
        if (!rep.pass()) {
            out << " failed:" << failed_properties(rep) << ";";
        }
        for (const auto &s : rep.skipped) {
            out << " skipped " << s << ";";
        }
    }
    for (const auto &name : required) {
        bool found = false;
        for (const auto &rep : reps) {
            for (const auto &r : rep.properties) {
                found |= r.name == name;
            }
        }
        if (!found) {
            pass = false;
            out << " missing " << name << ";";
        }
    }
    return {pass, out.str()};
}

VerifyConfig config(int64_t p, int m, size_t n) {
    VerifyConfig c;
    c.p = p;
    c.m = m;
    c.n = n;
    c.seed = 20260101;
    c.samples = 10000;
    return c;
}

// Keeps the randomized properties and drops exhaustive ones that the default budget would still admit.
VerifyConfig random_only(VerifyConfig c) {
    c.budget = 1000000;
    return c;
}

Outcome criterion1() {
    auto fx = mermin_fixtures();
    auto x = solve_classical(fx.square);
    int64_t count = brute_force_count(fx.square);
    auto sol = check_solution_conditions(fx.square, fx.square_assignment);
    std::ostringstream out;
    out << "solve_classical: " << (x ? "found" : "absent") << "; exhaustive: " << count
        << " of 512; torsion/commutativity/constraints: " << sol.torsion << sol.commutativity << sol.constraints;
    return {!x && count == 0 && sol.quantum_solution(), out.str()};
}

Outcome criterion2() {
    auto spec = qubit_star_spec();
    auto t = output_table(spec);
    std::vector<int64_t> o;
    for (const auto &v : t.o) {
        o.push_back(v.value_or(-1));
    }
    bool is_or = o == std::vector<int64_t>{0, 1, 1, 1};
    auto fx = mermin_fixtures();
    auto simulated = lcs_from_mbqc(spec, t);
    int64_t sim = brute_force_count(simulated), fixture = brute_force_count(fx.star);
    std::ostringstream out;
    out << "simulated o = (" << o[0] << "," << o[1] << "," << o[2] << "," << o[3]
        << ") = OR; displayed column (0,0,0,1) is AND and is not what the stated operators produce; "
        << "4x3 systems with b = OR and b = (0,0,0,1): " << sim << " and " << fixture << " of 8 classical solutions";
    return {is_or && sim == 0 && fixture == 0 && !solve_classical(fx.star) && !solve_classical(simulated), out.str()};
}

Outcome criterion3() {
    bool pass = true;
    std::ostringstream out;
    for (int64_t p : {3, 5, 7}) {
        auto start = std::chrono::steady_clock::now();
        auto t = output_table(qudit_star_spec(p));
        bool closed = t.complete();
        for (size_t r = 0; r < t.inputs.size() && closed; r++) {
            closed = *t.o[r] == qudit_star_closed_form(p, t.inputs[r][0], t.inputs[r][1]);
        }
        auto w = contextuality_witness(t);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.all_deterministic() && t.inputs.size() == static_cast<size_t>(p * p) && closed && w.degree >= p &&
                  secs < 10;
        pass &= ok;
        out << "p=" << p << ": deterministic " << t.all_deterministic() << ", closed form " << closed << ", degree "
            << w.degree << ", " << secs << "s; ";
    }
    return {pass, out.str()};
}

Outcome criterion12() {
    auto rep = mbqc_family_report(qudit_star_spec(3));
    std::ostringstream out;
    out << rep.rows << " settings: torsion " << rep.torsion << ", GHZ row constraints " << rep.ghz_constraints
        << ", commute on GHZ " << rep.all_commute_on_ghz << ", exact commutativity " << rep.all_commute_exactly;
    bool named = false;
    if (rep.noncommuting_pair) {
        auto spec = qudit_star_spec(3);
        auto E = mbqc_operator(spec, rep.noncommuting_pair->first);
        auto F = mbqc_operator(spec, rep.noncommuting_pair->second);
        named = !t_commute(E, F) && commute_on_ghz(E, F);
        out << "; non-commuting pair: inputs " << json(rep.noncommuting_pair->first).dump() << " and "
            << json(rep.noncommuting_pair->second).dump();
    }
    return {rep.torsion && rep.ghz_constraints && rep.all_commute_on_ghz && !rep.all_commute_exactly && named,
            out.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"Mermin-Peres square", 1, criterion1},
        {"Mermin star", 1, criterion2},
        {"qudit star contextuality, p in {3,5,7}", 30, criterion3},
        {"power and commutation identities, p=3 m=2", 30,
         [] {
             return suite_outcome({run_suite("lemma1", config(3, 2, 1))},
                                  {"lemma1.power_closed_form", "lemma1.diagonal_conjugation", "lemma1.twisted_power",
                                   "lemma1.commutator_formula"});
         }},
        {"torsion characterizations, p=3 m=2 n<=2", 0,
         [] {
             return suite_outcome({run_suite("torsion", config(3, 2, 2))},
                                  {"torsion.single_site", "torsion.tensor_n1", "torsion.tensor_n2"});
         }},
        {"maximal p-torsion abelian subgroups", 60,
         [] {
             return suite_outcome({run_suite("subgroups", config(3, 2, 1))},
                                  {"subgroups.classification", "subgroups.even_prime_m2", "subgroups.even_prime_m3",
                                   "subgroups.dihedral"});
         }},
        {"symplectic commutator law", 0,
         [] {
             return suite_outcome({run_suite("symplectic", config(3, 2, 3))},
                                  {"symplectic.exhaustive_n1", "symplectic.random"});
         }},
        {"phi homomorphism on commuting p-torsion pairs", 0,
         [] {
             return suite_outcome({run_suite("phi", config(3, 2, 2)), run_suite("phi", config(5, 2, 3))},
                                  {"phi.homomorphism_n1", "phi.homomorphism_n2", "phi.homomorphism_random",
                                   "phi.remark_naive_breaks", "phi.torsion_preservation_n2",
                                   "phi.center_preservation_n2", "phi.commutator_preservation_n2"});
         }},
        {"level decomposition round trip", 0,
         [] {
             return suite_outcome({run_suite("decomposition", config(3, 2, 1)),
                                   run_suite("decomposition", random_only(config(5, 2, 1)))},
                                  {"decomposition.exhaustive", "decomposition.random"});
         }},
        {"reduction of quantum solutions to classical ones", 0,
         [] {
             return suite_outcome({run_suite("pipeline", config(3, 2, 2)), run_suite("pipeline", config(5, 2, 2))},
                                  {"pipeline.abelian_classes", "pipeline.cancelling_pairs", "pipeline.classical_lifts"});
         }},
        {"even prime boundary", 0,
         [] {
             return suite_outcome({run_suite("even-prime", config(2, 2, 1))},
                                  {"even_prime.example", "even_prime.reduction_refused",
                                   "even_prime.mermin_square_solution"});
         }},
        {"operator vs quantum solution dichotomy", 0, criterion12},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[k].limit_seconds > 0 && secs >= criteria[k].limit_seconds) {
            o.pass = false;
            o.detail += " (time limit " + std::to_string(criteria[k].limit_seconds) + "s exceeded)";
        }
        failures += !o.pass;
        std::printf("%s [%zu] %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
