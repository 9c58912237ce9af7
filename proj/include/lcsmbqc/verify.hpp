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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lcsmbqc/json_io.hpp"

/// Batch property suites: exhaustive checks where the group is small enough, seeded random checks elsewhere.
namespace lcsmbqc {

struct VerifyConfig {
    int64_t p = 3;
    int m = 2;
    size_t n = 2;
    PhiVariant variant = PhiVariant::kProof;
    int64_t budget = kDefaultBudget;
    uint64_t seed = 1;
    /// Number of random cases per randomized property; 0 disables them.
    int64_t samples = 10000;
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    int64_t checked = 0;
    std::string detail;
    std::string counterexample;
};

struct SuiteReport {
    std::string suite;
    VerifyConfig config;
    std::vector<PropertyResult> properties;
    /// Parts not run because they exceed the budget or do not apply to the configuration.
    std::vector<std::string> skipped;
    bool pass() const;
    const PropertyResult &property(const std::string &name) const;
};

const std::vector<std::string> &suite_names();

/// Runs one suite. Properties are reported in name order. Throws std::invalid_argument for unknown
/// suites or invalid configurations.
SuiteReport run_suite(const std::string &suite, const VerifyConfig &config);

json to_json(const VerifyConfig &x);
json to_json(const PropertyResult &x);
json to_json(const SuiteReport &x);

/// Seeded generator of scalar-commuting pairs built from the three commuting-pair cases:
/// two diagonal elements, a shift with a linear-phase diagonal, and a shift with a power of itself.
class PairSampler {
   public:
    PairSampler(int64_t p, int m, uint64_t seed);

    int64_t p() const {
        return p_;
    }
    int64_t uniform(int64_t n);

    /// Diagonal det-1 table with values of level <= m.
    PhaseFunction random_torus();
    /// Diagonal det-1 table in T_(p).
    PhaseFunction random_torus_p();
    /// Diagonal det-1 table whose level-2 content is a constant p-th root of w; p-th power is scalar.
    PhaseFunction random_deep_constant();
    /// (xi, b) with b != 0 and xi of level <= m.
    KElement random_shift();

    /// Single-site pair with scalar commutator. With `torsion_ready`, both elements have scalar p-th
    /// power. With `target`, the commutator is w^target.
    std::pair<KElement, KElement> site_pair(std::optional<int64_t> target, bool torsion_ready);

    /// Commuting pair of p-torsion tensors on n sites.
    std::pair<TensorElement, TensorElement> commuting_torsion_pair(size_t n);
    /// Pair of tensors on n sites whose commutator is a scalar w^c (c random).
    std::pair<TensorElement, TensorElement> scalar_commuting_pair(size_t n, bool torsion_ready);
    /// Multiplies the sites by a global phase of level <= 2 that makes the product p-torsion.
    TensorElement with_torsion_global(std::vector<KElement> sites);

   private:
    int64_t p_;
    int m_;
    std::mt19937_64 rng_;
};

}  // namespace lcsmbqc
