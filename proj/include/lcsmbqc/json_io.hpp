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

#include <string>
#include <vector>

#include "json.hpp"
#include "lcsmbqc/kgroup.hpp"
#include "lcsmbqc/ktensor.hpp"
#include "lcsmbqc/lcs.hpp"
#include "lcsmbqc/mbqc.hpp"
#include "lcsmbqc/projection.hpp"

/// JSON encodings of the library types. Readers throw std::invalid_argument on malformed input.
namespace lcsmbqc {

using json = nlohmann::ordered_json;

/// {"p": 3, "M": 2, "e": 4}; written in canonical form, read in any form.
json to_json(const Phase &x);
Phase phase_from_json(const json &j);

/// {"p": 3, "values": [Phase, ...]}.
json to_json(const PhaseFunction &x);
PhaseFunction phase_function_from_json(const json &j);

/// {"p": 3, "m": 2, "theta": [[...], ...]}.
json to_json(const LevelCoefficients &x);
LevelCoefficients level_coefficients_from_json(const json &j);

/// {"b": 1, "xi": PhaseFunction, "m": 2}. When "m" is absent, `default_m` is used, raised to the level of xi.
json to_json(const KElement &x);
KElement kelement_from_json(const json &j, int default_m = 2);

/// {"global": Phase, "sites": [KElement, ...], "m": 2}. All sites share one level cap.
json to_json(const TensorElement &x);
TensorElement tensor_from_json(const json &j, int default_m = 2);

/// {"p": 3, "c": Phase, "a": [...], "b": [...]}.
json to_json(const HWElement &x);
HWElement hw_from_json(const json &j);

/// {"d": 2, "A": [[...], ...], "b": [...]}; an "n" field gives the width of a system without rows.
json to_json(const LCS &x);
LCS lcs_from_json(const json &j);

/// {"0": TensorElement, "1": TensorElement, ...} keyed by generator index; an optional "J" entry sets J.
json to_json(const GeneratorAssignment &x);
GeneratorAssignment assignment_from_json(const json &j, int default_m = 2);

/// {"p": 3, "m": 2, "n_inputs": 2, "sites": [{"xi": PhaseFunction, "coeffs": [...], "offset": 0}, ...]}.
json to_json(const MbqcSpec &x);
MbqcSpec mbqc_spec_from_json(const json &j);

json to_json(const OutputTable &x);
/// CSV with columns i_1,...,i_n,o,deterministic; o is empty for non-deterministic rows.
std::string output_table_csv(const OutputTable &t);

json to_json(const SolutionReport &x);
json to_json(const HWConditions &x);
json to_json(const ReductionReport &x);
json to_json(const SubgroupReport &x);
json to_json(const DihedralReport &x);
json to_json(const EvenPrimeReport &x);
json to_json(const MbqcFamilyReport &x);

json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace lcsmbqc
