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


#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lcsmbqc/verify.hpp"
#include "lcsmbqc/zp.hpp"

using namespace lcsmbqc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    int64_t p = 3;
    int m = 2;
    size_t n = 2;
    std::string variant = "proof";
    int64_t budget = 0;
    uint64_t seed = 1;
    int64_t samples = 10000;
    std::string spec;
    std::string assignment;
    std::string input;
    std::string out;
    bool print_json = false;
};

json config_json(const RunConfig &c) {
    json j{{"command", c.command}, {"p", c.p},       {"m", c.m},       {"n", c.n},
           {"variant", c.variant}, {"budget", c.budget}, {"seed", c.seed}, {"samples", c.samples}};
    for (const auto &[key, value] : {std::pair{"spec", c.spec}, {"assignment", c.assignment}, {"input", c.input}}) {
        if (!value.empty()) {
            j[key] = value;
        }
    }
    return j;
}

json load(const std::string &path) {
    if (path.empty()) {
        throw UsageError("missing input file");
    }
    if (path == "-") {
        return json::parse(std::cin);
    }
    return read_json_file(path);
}

std::string lcs_str(const LCS &s) {
    std::ostringstream out;
    out << "LCS over Z_" << s.d << ": " << s.rows() << " equations, " << s.cols() << " variables\n";
    for (size_t i = 0; i < s.rows(); i++) {
        out << "  ";
        bool first = true;
        for (size_t j = 0; j < s.cols(); j++) {
            if (!s.A[i][j]) {
                continue;
            }
            out << (first ? "" : " + ") << (s.A[i][j] == 1 ? "" : std::to_string(s.A[i][j])) << "x" << j + 1;
            first = false;
        }
        out << (first ? "0" : "") << " = " << s.b[i] << "\n";
    }
    return out.str();
}

std::string table_str(const OutputTable &t) {
    std::ostringstream out;
    for (size_t k = 1; k <= t.n_inputs; k++) {
        out << "i_" << k << " ";
    }
    out << "| o\n";
    for (size_t r = 0; r < t.inputs.size(); r++) {
        for (auto v : t.inputs[r]) {
            out << std::string(2, ' ') << v << " ";
        }
        out << "| " << (t.o[r] ? std::to_string(*t.o[r]) : std::string("?")) << "\n";
    }
    return out.str();
}

int64_t count_classical(const LCS &s) {
    std::vector<int64_t> x(s.cols(), 0);
    int64_t count = 0;
    while (true) {
        count += check_classical(s, x);
        size_t k = 0;
        while (k < x.size() && ++x[k] == s.d) {
            x[k++] = 0;
        }
        if (k == x.size()) {
            return count;
        }
    }
}

// Prints the summary, writes the JSON report, and returns the exit code.
int finish(const RunConfig &cfg, json report, const std::string &summary, bool pass) {
    report["config"] = config_json(cfg);
    report["pass"] = pass;
    if (cfg.print_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << summary;
        if (summary.empty() || summary.back() != '\n') {
            std::cout << "\n";
        }
    }
    if (!cfg.out.empty()) {
        write_text_file(cfg.out, report.dump(2) + "\n");
    }
    return pass ? kExitPass : kExitFail;
}

//////////////////////////////////////////////////////////////////////////////
// demos

int demo_mermin_square(const RunConfig &cfg) {
    auto fx = mermin_fixtures();
    auto x = solve_classical(fx.square);
    int64_t count = count_classical(fx.square);
    auto sol = check_solution_conditions(fx.square, fx.square_assignment);
    std::ostringstream out;
    out << lcs_str(fx.square);
    out << "operators:";
    for (size_t k = 0; k < fx.square_assignment.g.size(); k++) {
        out << "\n  x" << k + 1 << " = " << fx.square_assignment.g[k].str();
    }
    out << "\nexhaustive: " << count << " of 512 assignments satisfy the system\n";
    out << "conditions: torsion " << (sol.torsion ? "PASS" : "FAIL") << ", commutativity "
        << (sol.commutativity ? "PASS" : "FAIL") << ", constraints " << (sol.constraints ? "PASS" : "FAIL") << "\n";
    out << "classical: " << (x ? "FOUND" : "NONE") << ", quantum: " << (sol.quantum_solution() ? "PASS" : "FAIL");
    json report{{"demo", "mermin-square"},
                {"lcs", to_json(fx.square)},
                {"assignment", to_json(fx.square_assignment)},
                {"classical_solution", x ? json(*x) : json(nullptr)},
                {"classical_count", count},
                {"quantum", to_json(sol)}};
    return finish(cfg, report, out.str(), !x && count == 0 && sol.quantum_solution());
}

int demo_mermin_star(const RunConfig &cfg) {
    auto spec = qubit_star_spec();
    auto table = output_table(spec);
    auto simulated = lcs_from_mbqc(spec, table);
    auto fx = mermin_fixtures();
    auto witness = contextuality_witness(table);
    bool is_or = table.complete();
    for (size_t r = 0; r < table.inputs.size() && is_or; r++) {
        is_or = *table.o[r] == (table.inputs[r][0] | table.inputs[r][1]);
    }
    int64_t sim_count = count_classical(simulated), fixture_count = count_classical(fx.star);
    std::ostringstream out;
    out << "simulated output table:\n" << table_str(table);
    out << "table is OR: " << (is_or ? "yes" : "no") << "; degree " << witness.degree
        << (witness.contextual ? " (contextual)" : "") << "\n";
    out << "simulated " << lcs_str(simulated);
    out << "  classical solutions: " << sim_count << " of 8\n";
    out << "fixture " << lcs_str(fx.star);
    out << "  classical solutions: " << fixture_count << " of 8\n";
    out << "classical: " << (sim_count || fixture_count ? "FOUND" : "NONE");
    json report{{"demo", "mermin-star"},
                {"table", to_json(table)},
                {"table_is_or", is_or},
                {"degree", witness.degree},
                {"contextual", witness.contextual},
                {"simulated_lcs", to_json(simulated)},
                {"simulated_classical_count", sim_count},
                {"fixture_lcs", to_json(fx.star)},
                {"fixture_classical_count", fixture_count}};
    return finish(cfg, report, out.str(), is_or && witness.contextual && sim_count == 0 && fixture_count == 0);
}

int demo_qudit_star(const RunConfig &cfg) {
    if (cfg.p == 2 || !is_prime(cfg.p)) {
        throw UsageError("qudit-star requires an odd prime p");
    }
    auto spec = qudit_star_spec(cfg.p);
    auto table = output_table(spec);
    bool closed = table.complete();
    for (size_t r = 0; r < table.inputs.size() && closed; r++) {
        closed = *table.o[r] == qudit_star_closed_form(cfg.p, table.inputs[r][0], table.inputs[r][1]);
    }
    auto witness = contextuality_witness(table);
    auto lcs = lcs_from_mbqc(spec, table);
    auto classical = solve_classical(lcs);
    auto family = mbqc_family_report(spec);
    std::ostringstream out;
    out << "qudit star, p = " << cfg.p << "\n" << table_str(table);
    out << "deterministic: " << (table.all_deterministic() ? "yes" : "no") << "; closed form: "
        << (closed ? "match" : "MISMATCH") << "\n";
    out << "degree " << witness.degree << " >= " << cfg.p << ": " << (witness.contextual ? "contextual" : "not contextual")
        << "\n";
    out << "LCS classical solution: " << (classical ? "FOUND" : "NONE") << "\n";
    out << "family: torsion " << (family.torsion ? "PASS" : "FAIL") << ", GHZ constraints "
        << (family.ghz_constraints ? "PASS" : "FAIL") << ", operator constraints "
        << (family.operator_constraints ? "PASS" : "FAIL") << ", commute on GHZ "
        << (family.all_commute_on_ghz ? "PASS" : "FAIL") << ", commute exactly "
        << (family.all_commute_exactly ? "PASS" : "FAIL");
    if (family.noncommuting_pair) {
        out << " (e.g. inputs " << json(family.noncommuting_pair->first).dump() << " and "
            << json(family.noncommuting_pair->second).dump() << ")";
    }
    json report{{"demo", "qudit-star"},
                {"table", to_json(table)},
                {"closed_form_match", closed},
                {"degree", witness.degree},
                {"contextual", witness.contextual},
                {"lcs", to_json(lcs)},
                {"classical_solution", classical ? json(*classical) : json(nullptr)},
                {"family", to_json(family)}};
    bool pass = table.all_deterministic() && closed && witness.contextual && !classical && family.torsion &&
                family.ghz_constraints && family.all_commute_on_ghz && !family.all_commute_exactly;
    return finish(cfg, report, out.str(), pass);
}

int cmd_demo(const RunConfig &cfg, const std::string &name) {
    if (name == "mermin-square") {
        return demo_mermin_square(cfg);
    }
    if (name == "mermin-star" || name == "qubit-star") {
        return demo_mermin_star(cfg);
    }
    if (name == "qudit-star") {
        return demo_qudit_star(cfg);
    }
    throw UsageError("unknown demo \"" + name + "\" (mermin-square, mermin-star, qudit-star)");
}

//////////////////////////////////////////////////////////////////////////////
// mbqc

int cmd_mbqc_run(const RunConfig &cfg) {
    auto spec = mbqc_spec_from_json(load(cfg.spec));
    auto table = output_table(spec);
    std::string csv = output_table_csv(table);
    json report{{"spec", to_json(spec)}, {"table", to_json(table)}};
    std::ostringstream summary;
    summary << csv << "deterministic: " << (table.all_deterministic() ? "yes" : "no");
    if (table.complete()) {
        auto witness = contextuality_witness(table);
        summary << "; degree " << witness.degree << (witness.contextual ? " (contextual)" : "");
        report["degree"] = witness.degree;
        report["contextual"] = witness.contextual;
    }
    if (!cfg.out.empty()) {
        write_text_file(cfg.out, csv);
    }
    RunConfig no_out = cfg;
    no_out.out.clear();
    return finish(no_out, report, summary.str(), true);
}

//////////////////////////////////////////////////////////////////////////////
// subgroups, phi

int cmd_subgroups(const RunConfig &cfg) {
    auto rep = k_maximal_p_torsion_abelian(cfg.p, cfg.m, cfg.budget);
    std::ostringstream out;
    out << "K_T(" << cfg.p << "^" << cfg.m << ")(" << cfg.p << "): order " << rep.group_order << ", "
        << rep.torsion_count << " p-torsion elements, " << rep.subgroups.size()
        << " maximal p-torsion abelian subgroups\n";
    std::map<std::string, int> kinds;
    for (size_t i = 0; i < rep.subgroups.size(); i++) {
        kinds[rep.kinds[i] + " order " + std::to_string(rep.subgroups[i].size())]++;
    }
    for (const auto &[k, c] : kinds) {
        out << "  " << c << " x " << k << "\n";
    }
    out << "center:";
    for (const auto &e : rep.center) {
        out << " " << e.str();
    }
    out << "\ncenter is <w>: " << (rep.center_is_omega ? "yes" : "no") << "; pairwise intersections = center: "
        << (rep.intersections_are_center ? "yes" : "no") << "; T_(p) maximal: " << (rep.torus_is_maximal ? "yes" : "no")
        << "\nclassification: " << (rep.classification_ok ? "PASS" : "FAIL");
    if (cfg.p == 2) {
        auto d = k_dihedral_check(cfg.m);
        out << "\ndihedral relations (m=" << cfg.m << "): " << (d.ok ? "PASS" : "FAIL");
        json report{{"subgroups", to_json(rep)}, {"dihedral", to_json(d)}};
        return finish(cfg, report, out.str(), rep.classification_ok && d.ok);
    }
    return finish(cfg, json{{"subgroups", to_json(rep)}}, out.str(), rep.classification_ok);
}

int cmd_phi(const RunConfig &cfg) {
    auto E = tensor_from_json(load(cfg.input), cfg.m);
    auto h = phi(E, parse_phi_variant(cfg.variant));
    std::cout << to_json(h).dump(2) << "\n";
    if (!cfg.out.empty()) {
        write_text_file(cfg.out, to_json(h).dump(2) + "\n");
    }
    return kExitPass;
}

//////////////////////////////////////////////////////////////////////////////
// lcs

int cmd_lcs_solve(const RunConfig &cfg) {
    auto s = lcs_from_json(load(cfg.input));
    auto x = solve_classical(s);
    std::ostringstream out;
    out << lcs_str(s) << "classical: ";
    if (x) {
        out << json(*x).dump();
    } else {
        out << "NONE";
    }
    return finish(cfg, json{{"lcs", to_json(s)}, {"solution", x ? json(*x) : json(nullptr)}}, out.str(), true);
}

int cmd_lcs_check(const RunConfig &cfg) {
    auto s = lcs_from_json(load(cfg.input));
    auto g = assignment_from_json(load(cfg.assignment), cfg.m);
    auto rep = check_solution_conditions(s, g);
    std::ostringstream out;
    out << "torsion " << (rep.torsion ? "PASS" : "FAIL") << ", commutativity " << (rep.commutativity ? "PASS" : "FAIL")
        << ", constraints " << (rep.constraints ? "PASS" : "FAIL") << ", constraints on GHZ "
        << (rep.constraints_on_ghz ? "PASS" : "FAIL") << "\n";
    for (const auto &f : rep.failures) {
        out << "  " << f << "\n";
    }
    out << "quantum solution: " << (rep.quantum_solution() ? "yes" : "no")
        << "; operator solution: " << (rep.operator_solution() ? "yes" : "no");
    return finish(cfg, json{{"report", to_json(rep)}}, out.str(), rep.quantum_solution());
}

int cmd_lcs_from_mbqc(const RunConfig &cfg) {
    auto spec = mbqc_spec_from_json(load(cfg.spec));
    auto table = output_table(spec);
    auto s = lcs_from_mbqc(spec, table);
    auto x = solve_classical(s);
    std::ostringstream out;
    out << lcs_str(s) << "classical: " << (x ? json(*x).dump() : std::string("NONE"));
    return finish(cfg, json{{"lcs", to_json(s)}, {"solution", x ? json(*x) : json(nullptr)}}, out.str(), true);
}

int cmd_lcs_reduce(const RunConfig &cfg) {
    auto s = lcs_from_json(load(cfg.input));
    auto g = assignment_from_json(load(cfg.assignment), cfg.m);
    auto red = reduce_to_classical(s, g);
    std::ostringstream out;
    out << "images:";
    for (size_t k = 0; k < red.images.size(); k++) {
        out << "\n  phi(x" << k + 1 << ") = " << red.images[k].str();
    }
    out << "\nclassical: " << json(red.x).dump() << " " << (red.classical_ok ? "PASS" : "FAIL")
        << "; image conditions " << (red.image_conditions.all() ? "PASS" : "FAIL");
    return finish(cfg, json{{"reduction", to_json(red)}}, out.str(), red.classical_ok && red.image_conditions.all());
}

//////////////////////////////////////////////////////////////////////////////
// verify

int cmd_verify(const RunConfig &cfg, const std::string &suite) {
    VerifyConfig v;
    v.p = cfg.p;
    v.m = cfg.m;
    v.n = cfg.n;
    v.variant = parse_phi_variant(cfg.variant);
    v.budget = cfg.budget;
    v.seed = cfg.seed;
    v.samples = cfg.samples;
    std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json reports = json::array();
    std::ostringstream out;
    bool pass = true;
    for (const auto &name : suites) {
        auto rep = run_suite(name, v);
        pass &= rep.pass();
        reports.push_back(to_json(rep));
        for (const auto &r : rep.properties) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks) " << r.detail << "\n";
            if (!r.pass) {
                out << "     counterexample: " << r.counterexample << "\n";
            }
        }
        for (const auto &s : rep.skipped) {
            out << "SKIP " << s << "\n";
        }
    }
    out << (pass ? "all properties hold" : "property failures");
    return finish(cfg, json{{"suites", reports}}, out.str(), pass);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification of measurement-operator groups, MBQC on GHZ states and linear constraint systems"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.budget = 0;
    bool done = false;
    int code = kExitPass;
    std::string demo_name, suite_name, mbqc_demo_name;

    auto common = [&](CLI::App *c, bool with_n) {
        c->add_option("--p", cfg.p, "prime")->capture_default_str();
        c->add_option("--m", cfg.m, "torus level cap")->capture_default_str();
        if (with_n) {
            c->add_option("--n", cfg.n, "number of tensor sites")->capture_default_str();
        }
        c->add_option("--budget", cfg.budget, "enumeration cap (default: LCSMBQC_BUDGET or 1e7)");
        c->add_option("--out", cfg.out, "write the report to this file");
        c->add_flag("--json", cfg.print_json, "print the JSON report instead of the summary");
    };

    auto *demo = app.add_subcommand("demo", "built-in fixtures: mermin-square, mermin-star, qudit-star");
    demo->add_option("name", demo_name, "demo name")->required();
    common(demo, false);

    auto *mbqc = app.add_subcommand("mbqc", "simulate an MBQC on the GHZ state");
    mbqc->require_subcommand(1);
    auto *mbqc_run = mbqc->add_subcommand("run", "output table of an MBQC spec (CSV with --out)");
    mbqc_run->add_option("--spec", cfg.spec, "MBQC spec JSON")->required();
    mbqc_run->add_option("--out", cfg.out, "CSV output path");
    mbqc_run->add_flag("--json", cfg.print_json, "print the JSON report instead of the summary");
    auto *mbqc_demo = mbqc->add_subcommand("demo", "qudit-star or qubit-star");
    mbqc_demo->add_option("name", mbqc_demo_name)->required();
    common(mbqc_demo, false);

    auto *subgroups = app.add_subcommand("subgroups", "maximal p-torsion abelian subgroups of K");
    common(subgroups, false);

    auto *phi_cmd = app.add_subcommand("phi", "project a TensorElement JSON onto the Heisenberg-Weyl group");
    phi_cmd->add_option("element", cfg.input, "TensorElement JSON file ('-' for stdin)")->required();
    phi_cmd->add_option("--variant", cfg.variant, "proof, displayed or naive")->capture_default_str();
    phi_cmd->add_option("--m", cfg.m, "level cap when the JSON omits it")->capture_default_str();
    phi_cmd->add_option("--out", cfg.out, "write the HWElement JSON to this file");

    auto *lcs = app.add_subcommand("lcs", "linear constraint systems");
    lcs->require_subcommand(1);
    auto *solve = lcs->add_subcommand("solve", "classical solution over Z_d");
    solve->add_option("system", cfg.input, "LCS JSON file")->required();
    solve->add_option("--out", cfg.out);
    solve->add_flag("--json", cfg.print_json);
    auto *check = lcs->add_subcommand("check", "check an operator assignment against the solution-group conditions");
    check->add_option("system", cfg.input, "LCS JSON file")->required();
    check->add_option("--assignment", cfg.assignment, "assignment JSON")->required();
    check->add_option("--m", cfg.m, "level cap when the JSON omits it");
    check->add_option("--out", cfg.out);
    check->add_flag("--json", cfg.print_json);
    auto *from_mbqc = lcs->add_subcommand("from-mbqc", "LCS read off an MBQC output table");
    from_mbqc->add_option("--spec", cfg.spec, "MBQC spec JSON")->required();
    from_mbqc->add_option("--out", cfg.out);
    from_mbqc->add_flag("--json", cfg.print_json);
    auto *reduce = lcs->add_subcommand("reduce", "reduce a quantum solution to a classical one (odd d)");
    reduce->add_option("system", cfg.input, "LCS JSON file")->required();
    reduce->add_option("--assignment", cfg.assignment, "assignment JSON")->required();
    reduce->add_option("--m", cfg.m, "level cap when the JSON omits it");
    reduce->add_option("--out", cfg.out);
    reduce->add_flag("--json", cfg.print_json);

    auto *verify = app.add_subcommand("verify", "property suites");
    std::string suites_help = "all";
    for (const auto &s : suite_names()) {
        suites_help += ", " + s;
    }
    verify->add_option("suite", suite_name, suites_help)->required();
    common(verify, true);
    verify->add_option("--variant", cfg.variant, "phi variant")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for randomized properties")->capture_default_str();
    verify->add_option("--samples", cfg.samples, "random cases per randomized property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cfg.budget <= 0) {
            cfg.budget = default_budget();
        }
        if (!is_prime(cfg.p)) {
            throw UsageError("--p must be prime");
        }
        if (cfg.m < 1 || cfg.n < 1) {
            throw UsageError("--m and --n must be positive");
        }
        parse_phi_variant(cfg.variant);
        if (*demo) {
            cfg.command = "demo " + demo_name;
            code = cmd_demo(cfg, demo_name);
        } else if (*mbqc_run) {
            cfg.command = "mbqc run";
            code = cmd_mbqc_run(cfg);
        } else if (*mbqc_demo) {
            cfg.command = "mbqc demo " + mbqc_demo_name;
            if (mbqc_demo_name != "qudit-star" && mbqc_demo_name != "qubit-star") {
                throw UsageError("unknown mbqc demo \"" + mbqc_demo_name + "\" (qudit-star, qubit-star)");
            }
            code = cmd_demo(cfg, mbqc_demo_name);
        } else if (*subgroups) {
            cfg.command = "subgroups";
            code = cmd_subgroups(cfg);
        } else if (*phi_cmd) {
            cfg.command = "phi";
            code = cmd_phi(cfg);
        } else if (*solve) {
            cfg.command = "lcs solve";
            code = cmd_lcs_solve(cfg);
        } else if (*check) {
            cfg.command = "lcs check";
            code = cmd_lcs_check(cfg);
        } else if (*from_mbqc) {
            cfg.command = "lcs from-mbqc";
            code = cmd_lcs_from_mbqc(cfg);
        } else if (*reduce) {
            cfg.command = "lcs reduce";
            code = cmd_lcs_reduce(cfg);
        } else if (*verify) {
            cfg.command = "verify " + suite_name;
            code = cmd_verify(cfg, suite_name);
        }
        done = true;
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return done ? code : kExitUsage;
}
