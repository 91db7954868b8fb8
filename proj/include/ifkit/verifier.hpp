// Copyright 2026 The ifkit Authors
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
#include <string_view>
#include <vector>

#include "ifkit/constraint.hpp"

namespace ifkit {

struct CheckResult {
  bool satisfied = false;
  std::string observed;    // measured quantity, human readable
  std::string diagnostic;  // non-empty when satisfied is false
};

struct VerificationReport {
  std::vector<std::pair<Constraint, CheckResult>> results;
  int satisfied_count = 0;
  int total = 0;
  bool all_satisfied = false;
};

// Dispatches to the checker for the constraint's subcategory. Pure and
// deterministic; absent structure fails softly, it never throws on malformed
// output text.
CheckResult verify(const Constraint& c, std::string_view output);

// Throws EmptyConstraintList. Result order matches input order.
VerificationReport verify_all(const std::vector<Constraint>& constraints,
                              std::string_view output);

CheckResult check_english_case(CaseMode mode, std::string_view text);

}  // namespace ifkit
