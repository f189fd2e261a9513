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


#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "ndwu/behavior_json.hpp"
#include "ndwu/boxes.hpp"

using namespace ndwu;

namespace {

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_behavior_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::AssertionFailed;
}

}  // namespace

TEST_CASE("parse a PR box document") {
  const std::string doc = R"({"p": {"0,0": [[0.5, 0], [0, 0.5]], "0,1": [[0.5, 0], [0, 0.5]],
                                  "1,0": [[0.5, 0], [0, 0.5]], "1,1": [[0, 0.5], [0.5, 0]]}})";
  const auto b = parse_behavior_json(doc);
  CHECK(b == boxes::pr_box());
  CHECK(b.tol() == kDefaultTol);
}

TEST_CASE("document tol and the override") {
  const std::string doc = R"({"p": {"0,0": [[0.25, 0.25], [0.25, 0.25]], "0,1": [[0.25, 0.25], [0.25, 0.25]],
                                  "1,0": [[0.25, 0.25], [0.25, 0.25]], "1,1": [[0.25, 0.25], [0.25, 0.25]]},
                            "tol": 1e-6})";
  CHECK(parse_behavior_json(doc).tol() == 1e-6);
  CHECK(parse_behavior_json(doc, 1e-3).tol() == 1e-3);
}

TEST_CASE("malformed documents") {
  CHECK(parse_kind("not json") == ErrorKind::ParseError);
  CHECK(parse_kind("[]") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"p": {"0,0": [[1, 0], [0, 0]]}})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"p": {"0,0": [[1, 0]], "0,1": [[1, 0], [0, 0]], "1,0": [[1, 0], [0, 0]],
                             "1,1": [[1, 0], [0, 0]]}})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"p": {"0,0": [[1, "x"], [0, 0]], "0,1": [[1, 0], [0, 0]], "1,0": [[1, 0], [0, 0]],
                             "1,1": [[1, 0], [0, 0]]}})") == ErrorKind::ParseError);
  // well formed but signaling
  CHECK(parse_kind(R"({"p": {"0,0": [[1, 0], [0, 0]], "0,1": [[0, 0], [1, 0]], "1,0": [[1, 0], [0, 0]],
                             "1,1": [[1, 0], [0, 0]]}})") == ErrorKind::SignalingDetected);
}

TEST_CASE("round trip preserves every entry bit for bit") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto extremals = boxes::extremal_boxes();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w(extremals.size());
    double total = 0.0;
    for (auto& x : w) total += (x = unit(rng));
    for (auto& x : w) x /= total;
    const auto b = boxes::mix(extremals, w);
    const auto back = parse_behavior_json(to_json(b));
    CHECK(back == b);
  }
}
