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


// Build a few boxes, evaluate the correlation criterion and the level-1 NPA
// condition, and locate boundary 2 at one noise level.

#include <cstdio>

#include "ndwu/ndwu.hpp"

int main() {
  using namespace ndwu;
  const std::pair<const char*, Behavior> named[] = {
      {"PR", boxes::pr_box()},
      {"uniform", boxes::uniform_box()},
      {"isotropic 0.7", boxes::noisy_family({0.7, 0.0, 0.0})},
      {"almost-quantum", boxes::aqc_behavior()},
  };
  for (const auto& [name, b] : named) {
    const auto r = criterion(b);
    std::printf("%-15s chsh %+.4f  ndwu %-9s npa %s\n", name, chsh(b), r.overall ? "ok" : "violated",
                criteria::npa_tlm(b) ? "ok" : "violated");
  }

  const sweep::Verdict generic = [](const boxes::FamilyPoint& p) { return criterion(boxes::noisy_family(p)).overall; };
  const double alpha = sweep::boundary_bisect(generic, {0.0, 0.0, 0.3}, {1.0, 0.0, 0.0});
  std::printf("critical alpha at tau = 0.3: %.10f\n", alpha);
}
