// Copyright 2026 The qtp authors
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

#include "qtp/protocol.hpp"

namespace qtp {

// Wire formats:
//   TwoQubitFano  {"r_a": [3], "r_b": [3], "corr": [9 row-major]}
//   PovmSet       {"elements": [{"weight": w, "state": <fano>}, ...]}
//   Protocol      {"resource": <fano>, "povm": <povm>,
//                  "corrections": [[9 row-major], ...]}

nlohmann::json to_json(const TwoQubitFano& f);
nlohmann::json to_json(const PovmSet& s);
nlohmann::json to_json(const Protocol& p);

TwoQubitFano fano_from_json(const nlohmann::json& j);
PovmSet povm_from_json(const nlohmann::json& j);
Protocol protocol_from_json(const nlohmann::json& j);

/// Parses and validates a protocol file. Throws ParseError on malformed
/// JSON; construction errors propagate from the Protocol constructor.
Protocol load_protocol(const std::string& path);
void save_protocol(const Protocol& p, const std::string& path);

}  // namespace qtp
