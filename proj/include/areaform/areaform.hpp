// Copyright 2026 The areaform Authors
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

#include "areaform/caratheodory.hpp"
#include "areaform/density.hpp"
#include "areaform/ext_real.hpp"
#include "areaform/gauge.hpp"
#include "areaform/hunt.hpp"
#include "areaform/instance.hpp"
#include "areaform/measure.hpp"
#include "areaform/metric_space.hpp"
#include "areaform/point_set.hpp"
#include "areaform/spaces.hpp"
#include "areaform/theorems.hpp"
