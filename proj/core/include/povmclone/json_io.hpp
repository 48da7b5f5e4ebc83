// Copyright 2026 The povmclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "povmclone/cloning.hpp"
#include "povmclone/constructions.hpp"
#include "povmclone/qtypes.hpp"

namespace povmclone {

// JSON document schema, version 1. Complex numbers are [re, im] pairs,
// matrices are row-major nested arrays of those pairs:
//   matrix:  [[[re,im], ...], ...]
//   state:   {"dim": d, "amplitudes": [[re,im], ...]}
//   density: {"dim": d, "matrix": ...}
//   povm:    {"dim": d, "elements": [matrix, ...]}
//   pvm:     {"dim": d, "projectors": [matrix, ...]}
//   channel: {"din": d, "dout": d, "kraus": [matrix, ...]}
// Deserializers funnel through the validating constructors, so malformed or
// unphysical inputs throw before any computation happens.

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json to_json(const Povm& povm);
Povm povm_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json to_json(const Pvm& pvm);
Pvm pvm_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json to_json(const ProbDist& p);
nlohmann::json to_json(const JointDist& t);

// Report payloads. Infinite relative entropies are encoded as the string
// "infinity" so documents stay valid JSON.
nlohmann::json to_json(const InputRecord& rec);
nlohmann::json to_json(const CloningReport& report);
nlohmann::json to_json(const NoCloningCheck& check);
nlohmann::json to_json(const PartialNoCloningCheck& check);
nlohmann::json to_json(const EqualityWitness& witness);
nlohmann::json to_json(const IntoleranceSurvey& survey);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace povmclone
