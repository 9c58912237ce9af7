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


#include "lcsmbqc/lcs.hpp"

#include <map>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

LCS::LCS(int64_t d_, std::vector<std::vector<int64_t>> A_, std::vector<int64_t> b_, std::optional<size_t> n_vars_)
    : d(d_), A(std::move(A_)), b(std::move(b_)), n_vars(0) {
    if (d < 2) {
        throw std::invalid_argument("LCS: modulus must be at least 2");
    }
    if (A.size() != b.size()) {
        throw std::invalid_argument("LCS: A has " + std::to_string(A.size()) + " rows but b has " +
                                    std::to_string(b.size()) + " entries");
    }
    if (A.empty() && !n_vars_) {
        throw std::invalid_argument("LCS: a system without equations needs an explicit number of variables");
    }
    n_vars = n_vars_ ? *n_vars_ : A[0].size();
    for (auto &row : A) {
        if (row.size() != n_vars) {
            throw std::invalid_argument(A[0].size() == n_vars ? "LCS: ragged matrix" : "LCS: rows disagree with n_vars");
        }
        for (auto &v : row) {
            v = mod(v, d);
        }
    }
    for (auto &v : b) {
        v = mod(v, d);
    }
}

std::optional<std::vector<int64_t>> solve_classical(const LCS &s) {
    int64_t p = s.d;
    if (!is_prime(p)) {
        throw std::invalid_argument("solve_classical: modulus " + std::to_string(p) + " is not prime (unsupported)");
    }
    size_t rows = s.rows(), cols = s.cols();
    // Augmented matrix in reduced row echelon form.
    std::vector<std::vector<int64_t>> M(rows, std::vector<int64_t>(cols + 1));
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            M[i][j] = s.A[i][j];
        }
        M[i][cols] = s.b[i];
    }
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t sel = r;
        while (sel < rows && M[sel][c] == 0) {
            sel++;
        }
        if (sel == rows) {
            continue;
        }
        std::swap(M[r], M[sel]);
        int64_t inv = inv_mod(M[r][c], p);
        for (auto &v : M[r]) {
            v = v * inv % p;
        }
        for (size_t i = 0; i < rows; i++) {
            if (i != r && M[i][c] != 0) {
                int64_t f = M[i][c];
                for (size_t j = 0; j <= cols; j++) {
                    M[i][j] = mod(M[i][j] - f * M[r][j], p);
                }
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    for (size_t i = r; i < rows; i++) {
        if (M[i][cols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<int64_t> x(cols, 0);
    for (size_t i = 0; i < r; i++) {
        x[pivot_col[i]] = M[i][cols];
    }
    return x;
}

bool check_classical(const LCS &s, const std::vector<int64_t> &x) {
    if (x.size() != s.cols()) {
        throw std::invalid_argument("check_classical: expected " + std::to_string(s.cols()) + " values");
    }
    for (size_t i = 0; i < s.rows(); i++) {
        int64_t acc = 0;
        for (size_t j = 0; j < s.cols(); j++) {
            acc = mod(acc + s.A[i][j] * x[j], s.d);
        }
        if (acc != s.b[i]) {
            return false;
        }
    }
    return true;
}

GeneratorAssignment::GeneratorAssignment(std::vector<TensorElement> g_)
    : g(std::move(g_)),
      J(g.empty() ? throw std::invalid_argument("GeneratorAssignment: no generators")
                  : TensorElement::scalar(g[0].p(), g[0].m(), g[0].n(), 1)) {
}

GeneratorAssignment::GeneratorAssignment(std::vector<TensorElement> g_, TensorElement J_)
    : g(std::move(g_)), J(std::move(J_)) {
}

static std::string row_name(size_t i) {
    return "row " + std::to_string(i + 1);
}

SolutionReport check_solution_conditions(const LCS &s, const GeneratorAssignment &ga) {
    if (ga.g.size() != s.cols()) {
        throw std::invalid_argument("check_solution_conditions: " + std::to_string(s.cols()) + " generators needed, got " +
                                    std::to_string(ga.g.size()));
    }
    for (const auto &e : ga.g) {
        if (e.p() != s.d || e.n() != ga.J.n() || e.m() != ga.J.m()) {
            throw std::invalid_argument("check_solution_conditions: assignment shape or modulus mismatch");
        }
    }
    SolutionReport rep;
    for (size_t k = 0; k < ga.g.size(); k++) {
        if (!t_is_p_torsion(ga.g[k])) {
            rep.torsion = false;
            rep.failures.push_back("g" + std::to_string(k + 1) + " is not d-torsion");
        }
        if (!t_commute(ga.J, ga.g[k])) {
            rep.commutativity = false;
            rep.failures.push_back("J does not commute with g" + std::to_string(k + 1));
        }
    }
    if (!t_is_p_torsion(ga.J)) {
        rep.torsion = false;
        rep.failures.push_back("J is not d-torsion");
    }
    for (size_t i = 0; i < s.rows(); i++) {
        for (size_t j = 0; j < s.cols(); j++) {
            for (size_t k = j + 1; k < s.cols(); k++) {
                if (s.A[i][j] && s.A[i][k] && !t_commute(ga.g[j], ga.g[k])) {
                    rep.commutativity = false;
                    rep.failures.push_back(row_name(i) + ": g" + std::to_string(j + 1) + " and g" +
                                           std::to_string(k + 1) + " do not commute");
                }
            }
        }
        TensorElement prod = TensorElement::identity(ga.J.p(), ga.J.m(), ga.J.n());
        for (size_t j = 0; j < s.cols(); j++) {
            if (s.A[i][j]) {
                prod = t_mul(prod, t_pow(ga.g[j], s.A[i][j]));
            }
        }
        TensorElement target = t_pow(ga.J, s.b[i]);
        if (!(prod == target)) {
            rep.constraints = false;
            rep.failures.push_back(row_name(i) + ": product differs from J^" + std::to_string(s.b[i]));
        }
        auto lp = ghz_evaluate(prod), lt = ghz_evaluate(target);
        if (!lp || !lt || !(*lp == *lt)) {
            rep.constraints_on_ghz = false;
        }
    }
    return rep;
}

static std::map<std::vector<int64_t>, Phase> ghz_image(const TensorElement &T) {
    std::map<std::vector<int64_t>, Phase> out;
    int64_t p = T.p();
    for (int64_t q = 0; q < p; q++) {
        std::vector<int64_t> ket;
        Phase amp = T.global;
        for (const auto &s : T.sites) {
            int64_t r = mod(q + s.b, p);
            ket.push_back(r);
            amp *= s.xi.values[r];
        }
        out.emplace(std::move(ket), amp);
    }
    return out;
}

bool commute_on_ghz(const TensorElement &E, const TensorElement &F) {
    return ghz_image(t_mul(E, F)) == ghz_image(t_mul(F, E));
}

LCS lcs_from_mbqc(const MbqcSpec &spec, const OutputTable &t) {
    if (!t.complete()) {
        throw std::invalid_argument("lcs_from_mbqc: output table has non-deterministic or non-omega rows");
    }
    std::vector<std::vector<int64_t>> L;
    std::vector<int64_t> o;
    for (size_t r = 0; r < t.inputs.size(); r++) {
        std::vector<int64_t> row;
        for (size_t k = 0; k < spec.sites.size(); k++) {
            row.push_back(spec.setting(k, t.inputs[r]));
        }
        L.push_back(std::move(row));
        o.push_back(*t.o[r]);
    }
    return LCS(spec.p, std::move(L), std::move(o));
}

HWConditions check_hw_conditions(const LCS &s, const std::vector<HWElement> &h) {
    if (h.size() != s.cols()) {
        throw std::invalid_argument("check_hw_conditions: wrong number of elements");
    }
    HWConditions c;
    int64_t p = s.d;
    size_t n = h.empty() ? 0 : h[0].n();
    for (const auto &e : h) {
        c.torsion = c.torsion && hw_pow(e, p).is_identity();
    }
    for (size_t i = 0; i < s.rows(); i++) {
        HWElement prod = HWElement::identity(p, n);
        for (size_t j = 0; j < s.cols(); j++) {
            if (!s.A[i][j]) {
                continue;
            }
            prod = hw_mul(prod, hw_pow(h[j], s.A[i][j]));
            for (size_t k = j + 1; k < s.cols(); k++) {
                if (s.A[i][k] && hw_commutator(h[j], h[k]) != 0) {
                    c.commutativity = false;
                }
            }
        }
        HWElement target(p, Phase::omega(p, s.b[i]), std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0));
        c.constraints = c.constraints && prod == target;
    }
    return c;
}

ReductionReport reduce_to_classical(const LCS &s, const GeneratorAssignment &g) {
    if (s.d == 2) {
        throw std::invalid_argument("reduce_to_classical: the reduction requires an odd prime (p = 2 refused)");
    }
    auto rep = check_solution_conditions(s, g);
    if (!rep.quantum_solution()) {
        std::string why = rep.failures.empty() ? "conditions fail" : rep.failures.front();
        throw std::invalid_argument("reduce_to_classical: assignment is not a quantum solution (" + why + ")");
    }
    ReductionReport out;
    for (const auto &e : g.g) {
        out.images.push_back(phi(e));
        out.x.push_back(value_map_nu(out.images.back()));
    }
    out.image_conditions = check_hw_conditions(s, out.images);
    out.classical_ok = check_classical(s, out.x);
    return out;
}

GeneratorAssignment classical_lift(const std::vector<int64_t> &x, int64_t p, int m, size_t n_sites) {
    std::vector<TensorElement> g;
    for (auto v : x) {
        g.push_back(TensorElement::scalar(p, m, n_sites, v));
    }
    return GeneratorAssignment(std::move(g));
}

LCS relation_lcs(const std::vector<TensorElement> &gens, int64_t budget) {
    if (gens.empty()) {
        throw std::invalid_argument("relation_lcs: no generators");
    }
    int64_t p = gens[0].p();
    int64_t total = ipow(p, static_cast<int>(gens.size()));
    if (total > budget) {
        throw BudgetExceeded("relation_lcs: " + std::to_string(total) + " coefficient vectors exceed the budget");
    }
    std::vector<std::vector<int64_t>> A;
    std::vector<int64_t> b;
    for (const auto &c : all_inputs(p, gens.size())) {
        TensorElement prod = TensorElement::identity(p, gens[0].m(), gens[0].n());
        bool zero = true;
        for (size_t k = 0; k < gens.size(); k++) {
            if (c[k]) {
                zero = false;
                prod = t_mul(prod, t_pow(gens[k], c[k]));
            }
        }
        if (zero) {
            continue;
        }
        auto s = prod.as_scalar();
        if (s && s->as_omega_power()) {
            A.push_back(c);
            b.push_back(*s->as_omega_power());
        }
    }
    return LCS(p, std::move(A), std::move(b), gens.size());
}

MerminFixtures mermin_fixtures() {
    LCS square(2,
               {{1, 1, 1, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 1, 1, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 1, 1, 1},
                {1, 0, 0, 1, 0, 0, 1, 0, 0},
                {0, 1, 0, 0, 1, 0, 0, 1, 0},
                {0, 0, 1, 0, 0, 1, 0, 0, 1}},
               {0, 0, 0, 0, 0, 1});
    // Qubits at level 2: Y = S X with S = diag(-i, i), and Z = i S.
    const int m = 2;
    PhaseFunction S(2, {Phase(2, m, 3), Phase(2, m, 1)});
    KElement I = KElement::identity(2, m), X = KElement::X(2, m), Y(S, 1, m), Sd(S, 0, m);
    Phase one = Phase::one(2);
    auto two = [&](const KElement &a, const KElement &b, Phase g) { return TensorElement(g, {a, b}); };
    std::vector<TensorElement> ops{
        two(X, I, one),                // x1 = X1
        two(I, X, one),                // x2 = X2
        two(X, X, one),                // x3 = X1 X2
        two(I, Y, one),                // x4 = Y2
        two(Y, I, one),                // x5 = Y1
        two(Y, Y, one),                // x6 = Y1 Y2
        two(X, Y, one),                // x7 = X1 Y2
        two(Y, X, one),                // x8 = Y1 X2
        two(Sd, Sd, Phase::omega(2)),  // x9 = Z1 Z2 = -(S (x) S)
    };
    LCS star(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0, 0, 0, 1});
    return MerminFixtures{square, GeneratorAssignment(std::move(ops)), star};
}

MbqcFamilyReport mbqc_family_report(const MbqcSpec &spec) {
    auto table = output_table(spec);
    MbqcFamilyReport rep{table.inputs.size(), true, true, true, true, true, std::nullopt};
    std::vector<TensorElement> ops;
    for (size_t r = 0; r < table.inputs.size(); r++) {
        ops.push_back(mbqc_operator(spec, table.inputs[r]));
        const auto &E = ops.back();
        rep.torsion = rep.torsion && t_is_p_torsion(E);
        auto lambda = ghz_evaluate(E);
        bool ghz_ok = lambda && table.o[r] && *lambda == Phase::omega(spec.p, *table.o[r]);
        rep.ghz_constraints = rep.ghz_constraints && ghz_ok;
        bool op_ok = table.o[r] && E == TensorElement::scalar(spec.p, spec.m, spec.sites.size(), *table.o[r]);
        rep.operator_constraints = rep.operator_constraints && op_ok;
    }
    for (size_t r = 0; r < ops.size(); r++) {
        for (size_t s = r + 1; s < ops.size(); s++) {
            rep.all_commute_on_ghz = rep.all_commute_on_ghz && commute_on_ghz(ops[r], ops[s]);
            if (!t_commute(ops[r], ops[s])) {
                rep.all_commute_exactly = false;
                if (!rep.noncommuting_pair) {
                    rep.noncommuting_pair = std::make_pair(table.inputs[r], table.inputs[s]);
                }
            }
        }
    }
    return rep;
}

}  // namespace lcsmbqc
