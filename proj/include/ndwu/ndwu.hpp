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


#pragma once

#include "ndwu/behavior.hpp"
#include "ndwu/behavior_json.hpp"
#include "ndwu/boxes.hpp"
#include "ndwu/campaigns.hpp"
#include "ndwu/criteria.hpp"
#include "ndwu/criterion.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"
#include "ndwu/linalg.hpp"
#include "ndwu/measures.hpp"
#include "ndwu/quantum.hpp"
#include "ndwu/random.hpp"
#include "ndwu/sweep.hpp"
