// Copyright 2026 The ndwu-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Behavior JSON documents:
//
//   {"p": {"0,0": [[p(00), p(01)], [p(10), p(11)]], "0,1": ..., "1,0": ..., "1,1": ...},
//    "tol": 1e-09}
//
// Keys of "p" are "nu,mu"; rows are Alice's outcome a, columns Bob's b.
// "tol" is optional. Numbers are written with 17 significant digits.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ndwu/behavior.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"

namespace ndwu {

/// `tol_override`, when set, wins over the document's "tol" key.
inline Behavior parse_behavior_json(std::string_view text,
                                    std::optional<double> tol_override = std::nullopt) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_object()) {
    throw Error(ErrorKind::ParseError, "expected an object with key \"p\"");
  }
  double tol = kDefaultTol;
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number()) throw Error(ErrorKind::ParseError, "\"tol\" must be a number");
    tol = doc["tol"].get<double>();
  }
  if (tol_override) tol = *tol_override;

  const auto& p = doc["p"];
  if (p.size() != 4) {
    throw Error(ErrorKind::ParseError, "\"p\" must have exactly the keys 0,0 0,1 1,0 1,1");
  }
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) {
      const std::string key = std::to_string(nu) + "," + std::to_string(mu);
      if (!p.contains(key)) throw Error(ErrorKind::ParseError, "missing setting key \"" + key + "\"");
      const auto& block = p[key];
      if (!block.is_array() || block.size() != 2) {
        throw Error(ErrorKind::ParseError, "\"" + key + "\" must be a 2x2 array");
      }
      for (int a = 0; a < 2; ++a) {
        const auto& row = block[static_cast<std::size_t>(a)];
        if (!row.is_array() || row.size() != 2) {
          throw Error(ErrorKind::ParseError, "\"" + key + "\" must be a 2x2 array");
        }
        for (int b = 0; b < 2; ++b) {
          const auto& cell = row[static_cast<std::size_t>(b)];
          if (!cell.is_number()) {
            throw Error(ErrorKind::ParseError, "\"" + key + "\" holds a non-numeric entry");
          }
          table[table_index(nu, mu, a, b)] = cell.get<double>();
        }
      }
    }
  return Behavior::validate(table, tol);
}

inline std::string to_json(const Behavior& behavior) {
  std::ostringstream out;
  out << "{\"p\": {";
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) {
      if (nu + mu > 0) out << ", ";
      out << '"' << nu << ',' << mu << "\": [";
      for (int a = 0; a < 2; ++a) {
        out << (a ? ", [" : "[") << format_double(behavior.p(nu, mu, a, 0)) << ", "
            << format_double(behavior.p(nu, mu, a, 1)) << ']';
      }
      out << ']';
    }
  out << "}, \"tol\": " << format_double(behavior.tol()) << "}";
  return out.str();
}

}  // namespace ndwu
