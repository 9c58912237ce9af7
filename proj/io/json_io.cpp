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


#include "lcsmbqc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("json: missing field \"") + name + "\"");
    }
    return j.at(name);
}

template <typename T>
T get(const json &j, const char *name) {
    try {
        return field(j, name).get<T>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("json: bad field \"") + name + "\": " + e.what());
    }
}

json table_json(const std::vector<std::vector<std::string>> &m) {
    json out = json::array();
    for (const auto &row : m) {
        out.push_back(row);
    }
    return out;
}

}  // namespace

json to_json(const Phase &x) {
    return json{{"p", x.p()}, {"M", x.level()}, {"e", x.num()}};
}

Phase phase_from_json(const json &j) {
    return Phase(get<int64_t>(j, "p"), get<int>(j, "M"), get<int64_t>(j, "e"));
}

json to_json(const PhaseFunction &x) {
    json values = json::array();
    for (const auto &v : x.values) {
        values.push_back(to_json(v));
    }
    return json{{"p", x.p}, {"values", values}};
}

PhaseFunction phase_function_from_json(const json &j) {
    int64_t p = get<int64_t>(j, "p");
    std::vector<Phase> values;
    for (const auto &v : field(j, "values")) {
        values.push_back(phase_from_json(v));
    }
    return PhaseFunction(p, std::move(values));
}

json to_json(const LevelCoefficients &x) {
    return json{{"p", x.p}, {"m", x.m}, {"theta", x.theta}};
}

LevelCoefficients level_coefficients_from_json(const json &j) {
    LevelCoefficients c(get<int64_t>(j, "p"), get<int>(j, "m"));
    auto theta = get<std::vector<std::vector<int64_t>>>(j, "theta");
    if (theta.size() != static_cast<size_t>(c.m)) {
        throw std::invalid_argument("json: theta must have m rows");
    }
    for (size_t r = 0; r < theta.size(); r++) {
        if (theta[r].size() != static_cast<size_t>(c.p)) {
            throw std::invalid_argument("json: each theta row must have p entries");
        }
        for (auto &v : theta[r]) {
            v = mod(v, c.p);
        }
    }
    c.theta = std::move(theta);
    return c;
}

json to_json(const KElement &x) {
    return json{{"b", x.b}, {"xi", to_json(x.xi)}, {"m", x.m}};
}

KElement kelement_from_json(const json &j, int default_m) {
    PhaseFunction xi = phase_function_from_json(field(j, "xi"));
    int m = j.contains("m") ? get<int>(j, "m") : std::max(default_m, pf_value_level(xi));
    return KElement(std::move(xi), get<int64_t>(j, "b"), m);
}

json to_json(const TensorElement &x) {
    json sites = json::array();
    for (const auto &s : x.sites) {
        json e = to_json(s);
        e.erase("m");
        sites.push_back(e);
    }
    return json{{"global", to_json(x.global)}, {"sites", sites}, {"m", x.m()}};
}

TensorElement tensor_from_json(const json &j, int default_m) {
    int m = default_m;
    if (j.contains("m")) {
        m = get<int>(j, "m");
    } else {
        for (const auto &s : field(j, "sites")) {
            m = std::max(m, pf_value_level(phase_function_from_json(field(s, "xi"))));
        }
    }
    std::vector<KElement> sites;
    for (auto s : field(j, "sites")) {
        s["m"] = m;
        sites.push_back(kelement_from_json(s, m));
    }
    return TensorElement(phase_from_json(field(j, "global")), std::move(sites));
}

json to_json(const HWElement &x) {
    return json{{"p", x.p}, {"c", to_json(x.c)}, {"a", x.a}, {"b", x.b}, {"str", x.str()}};
}

HWElement hw_from_json(const json &j) {
    return HWElement(get<int64_t>(j, "p"), phase_from_json(field(j, "c")), get<std::vector<int64_t>>(j, "a"),
                     get<std::vector<int64_t>>(j, "b"));
}

json to_json(const LCS &x) {
    json out{{"d", x.d}, {"A", x.A}, {"b", x.b}};
    if (x.A.empty()) {
        out["n"] = x.n_vars;
    }
    return out;
}

LCS lcs_from_json(const json &j) {
    std::optional<size_t> n;
    if (j.contains("n")) {
        n = get<size_t>(j, "n");
    }
    return LCS(get<int64_t>(j, "d"), get<std::vector<std::vector<int64_t>>>(j, "A"), get<std::vector<int64_t>>(j, "b"), n);
}

json to_json(const GeneratorAssignment &x) {
    json out = json::object();
    for (size_t k = 0; k < x.g.size(); k++) {
        out[std::to_string(k)] = to_json(x.g[k]);
    }
    out["J"] = to_json(x.J);
    return out;
}

GeneratorAssignment assignment_from_json(const json &j, int default_m) {
    if (!j.is_object()) {
        throw std::invalid_argument("json: assignment must be an object keyed by generator index");
    }
    std::vector<std::optional<TensorElement>> slots;
    for (const auto &[key, value] : j.items()) {
        if (key == "J") {
            continue;
        }
        size_t k;
        try {
            size_t used = 0;
            k = std::stoul(key, &used);
            if (used != key.size()) {
                throw std::invalid_argument(key);
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("json: assignment key \"" + key + "\" is not a generator index");
        }
        if (k >= slots.size()) {
            slots.resize(k + 1);
        }
        slots[k] = tensor_from_json(value, default_m);
    }
    std::vector<TensorElement> g;
    for (size_t k = 0; k < slots.size(); k++) {
        if (!slots[k]) {
            throw std::invalid_argument("json: assignment is missing generator " + std::to_string(k));
        }
        g.push_back(*slots[k]);
    }
    if (g.empty()) {
        throw std::invalid_argument("json: assignment has no generators");
    }
    if (j.contains("J")) {
        return GeneratorAssignment(std::move(g), tensor_from_json(j.at("J"), default_m));
    }
    return GeneratorAssignment(std::move(g));
}

json to_json(const MbqcSpec &x) {
    json sites = json::array();
    for (const auto &s : x.sites) {
        sites.push_back(json{{"xi", to_json(s.xi)}, {"coeffs", s.coeffs}, {"offset", s.offset}});
    }
    return json{{"p", x.p}, {"m", x.m}, {"n_inputs", x.n_inputs}, {"sites", sites}};
}

MbqcSpec mbqc_spec_from_json(const json &j) {
    MbqcSpec spec{get<int64_t>(j, "p"), get<int>(j, "m"), get<size_t>(j, "n_inputs"), {}};
    for (const auto &s : field(j, "sites")) {
        int64_t offset = s.contains("offset") ? get<int64_t>(s, "offset") : 0;
        spec.sites.push_back(
            MbqcSite{phase_function_from_json(field(s, "xi")), get<std::vector<int64_t>>(s, "coeffs"), offset});
    }
    spec.validate();
    return spec;
}

json to_json(const OutputTable &x) {
    json rows = json::array();
    for (size_t r = 0; r < x.inputs.size(); r++) {
        json row{{"input", x.inputs[r]}, {"deterministic", x.deterministic(r)}};
        row["eigenvalue"] = x.eigenvalue[r] ? to_json(*x.eigenvalue[r]) : json(nullptr);
        row["o"] = x.o[r] ? json(*x.o[r]) : json(nullptr);
        rows.push_back(row);
    }
    return json{{"p", x.p},
                {"n_inputs", x.n_inputs},
                {"all_deterministic", x.all_deterministic()},
                {"complete", x.complete()},
                {"rows", rows}};
}

std::string output_table_csv(const OutputTable &t) {
    std::ostringstream out;
    for (size_t k = 1; k <= t.n_inputs; k++) {
        out << "i_" << k << ",";
    }
    out << "o,deterministic\n";
    for (size_t r = 0; r < t.inputs.size(); r++) {
        for (auto v : t.inputs[r]) {
            out << v << ",";
        }
        if (t.o[r]) {
            out << *t.o[r];
        }
        out << "," << (t.deterministic(r) ? "true" : "false") << "\n";
    }
    return out.str();
}

json to_json(const SolutionReport &x) {
    return json{{"torsion", x.torsion},
                {"commutativity", x.commutativity},
                {"constraints", x.constraints},
                {"constraints_on_ghz", x.constraints_on_ghz},
                {"operator_solution", x.operator_solution()},
                {"quantum_solution", x.quantum_solution()},
                {"failures", x.failures}};
}

json to_json(const HWConditions &x) {
    return json{
        {"torsion", x.torsion}, {"commutativity", x.commutativity}, {"constraints", x.constraints}, {"all", x.all()}};
}

json to_json(const ReductionReport &x) {
    json images = json::array();
    for (const auto &h : x.images) {
        images.push_back(to_json(h));
    }
    return json{{"x", x.x},
                {"images", images},
                {"image_conditions", to_json(x.image_conditions)},
                {"classical_ok", x.classical_ok}};
}

json to_json(const SubgroupReport &x) {
    json subgroups = json::array();
    for (size_t k = 0; k < x.subgroups.size(); k++) {
        json elems = json::array();
        for (const auto &e : x.subgroups[k]) {
            elems.push_back(e.str());
        }
        subgroups.push_back(json{{"kind", x.kinds[k]}, {"order", x.subgroups[k].size()}, {"elements", elems}});
    }
    json center = json::array();
    for (const auto &e : x.center) {
        center.push_back(e.str());
    }
    return json{{"p", x.p},
                {"m", x.m},
                {"group_order", x.group_order},
                {"torsion_count", x.torsion_count},
                {"subgroup_count", x.subgroups.size()},
                {"center", center},
                {"center_is_omega", x.center_is_omega},
                {"intersections_are_center", x.intersections_are_center},
                {"torus_is_maximal", x.torus_is_maximal},
                {"classification_ok", x.classification_ok},
                {"subgroups", subgroups}};
}

json to_json(const DihedralReport &x) {
    return json{{"m", x.m},
                {"rotation_order", x.rotation_order},
                {"reflection_order", x.reflection_order},
                {"conjugation_inverts", x.conjugation_inverts},
                {"generated_order", x.generated_order},
                {"ok", x.ok}};
}

json to_json(const EvenPrimeReport &x) {
    return json{{"M", to_json(x.M)},
                {"N", to_json(x.N)},
                {"M_squared_identity", x.M_squared_identity},
                {"N_squared_identity", x.N_squared_identity},
                {"commute", x.commute},
                {"MN_is_minus_one", x.MN_is_minus_one},
                {"phi_M", to_json(x.phi_M)},
                {"phi_N", to_json(x.phi_N)},
                {"phi_MN", to_json(x.phi_MN)},
                {"phi_M_phi_N", to_json(x.phi_M_phi_N)},
                {"homomorphism_fails", x.homomorphism_fails},
                {"M_matrix", table_json(x.M_matrix)},
                {"phi_M_matrix", table_json(x.phi_M_matrix)}};
}

json to_json(const MbqcFamilyReport &x) {
    json out{{"rows", x.rows},
             {"torsion", x.torsion},
             {"ghz_constraints", x.ghz_constraints},
             {"operator_constraints", x.operator_constraints},
             {"all_commute_on_ghz", x.all_commute_on_ghz},
             {"all_commute_exactly", x.all_commute_exactly}};
    out["noncommuting_pair"] =
        x.noncommuting_pair ? json::array({x.noncommuting_pair->first, x.noncommuting_pair->second}) : json(nullptr);
    return out;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace lcsmbqc
