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

#include <iosfwd>
#include <string>
#include <vector>

#include "areaform/instance.hpp"

namespace areaform {

/// The command-line front end: `args` excludes the program name. Returns 0
/// for verified or equal verdicts, 1 for violations and hypothesis failures,
/// 2 for malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Gauge values, masses and diameter exponents converted to doubles.
MetricInstance with_backend(const MetricInstance& instance, Backend backend);

}  // namespace areaform
