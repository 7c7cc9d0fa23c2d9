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

#include "qtp/json_io.hpp"

#include <fstream>

namespace qtp {

namespace {

using nlohmann::json;

json vec_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json mat_to_json(const Mat3& m) {
  json out = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.push_back(m(i, j));
  return out;
}

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected a 3-element array");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Mat3 mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 9) throw ParseError("expected a 9-element array");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = j[3 * i + k].get<double>();
  return m;
}

}  // namespace

nlohmann::json to_json(const TwoQubitFano& f) {
  return json{{"r_a", vec_to_json(f.r_a)}, {"r_b", vec_to_json(f.r_b)},
              {"corr", mat_to_json(f.corr)}};
}

nlohmann::json to_json(const PovmSet& s) {
  json elements = json::array();
  for (const auto& e : s.elements) {
    elements.push_back(json{{"weight", e.weight}, {"state", to_json(e.state)}});
  }
  return json{{"elements", elements}};
}

nlohmann::json to_json(const Protocol& p) {
  json corrections = json::array();
  for (const auto& r : p.corrections()) corrections.push_back(mat_to_json(r.matrix()));
  return json{{"resource", to_json(p.resource())}, {"povm", to_json(p.povm())},
              {"corrections", corrections}};
}

TwoQubitFano fano_from_json(const nlohmann::json& j) {
  try {
    TwoQubitFano f;
    f.r_a = vec_from_json(j.at("r_a"));
    f.r_b = vec_from_json(j.at("r_b"));
    f.corr = mat_from_json(j.at("corr"));
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad Fano object: ") + e.what());
  }
}

PovmSet povm_from_json(const nlohmann::json& j) {
  try {
    PovmSet s;
    for (const auto& e : j.at("elements")) {
      s.elements.emplace_back(e.at("weight").get<double>(), fano_from_json(e.at("state")));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad POVM object: ") + e.what());
  }
}

Protocol protocol_from_json(const nlohmann::json& j) {
  std::vector<Rotation> corrections;
  try {
    for (const auto& r : j.at("corrections")) corrections.emplace_back(mat_from_json(r));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad protocol object: ") + e.what());
  }
  TwoQubitFano resource = [&] {
    try {
      return fano_from_json(j.at("resource"));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad protocol object: ") + e.what());
    }
  }();
  PovmSet povm = [&] {
    try {
      return povm_from_json(j.at("povm"));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad protocol object: ") + e.what());
    }
  }();
  return Protocol(std::move(resource), std::move(povm), std::move(corrections));
}

Protocol load_protocol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open protocol file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return protocol_from_json(j);
}

void save_protocol(const Protocol& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write protocol file: " + path);
  out << to_json(p).dump(2) << "\n";
}

}  // namespace qtp
