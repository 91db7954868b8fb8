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

#include <optional>
#include <string>
#include <vector>

#include "ifkit/chat_client.hpp"
#include "ifkit/constraint.hpp"
#include "ifkit/prompts.hpp"

namespace ifkit {

struct ConflictEntry {
  int index_a = 0;
  int index_b = 0;
  std::string reason;
};

struct ConflictReport {
  std::vector<ConflictEntry> conflicts;
  bool has_conflict = false;
};

// Pairwise rule matrix: mutually exclusive case modes, English case vs
// Chinese script, empty count intersections on the same unit, include vs
// avoid of the same phrase, ending vs excluded punctuation, infeasible
// structural bounds, and phrase letters incompatible with a case mode.
ConflictReport detect_conflicts(const std::vector<Constraint>& constraints);

// Single-pair view used by the rule matrix and by tests.
std::optional<std::string> pair_conflict(const Constraint& a,
                                         const Constraint& b);

struct LlmConflictVerdict {
  bool constraint_conflict = false;
  bool question_covers_all = false;
  std::string explanations;
};

// Parses the Yes/No fields of the conflict-detection response format.
// Throws ParseError when either field is absent.
LlmConflictVerdict parse_conflict_response(const std::string& raw);

LlmConflictVerdict llm_conflict_check(ChatClient& client,
                                      const PromptTemplate& tmpl,
                                      const std::vector<Constraint>& constraints,
                                      const std::string& question);

enum class GatePolicy { RulesOnly, RulesThenLlm };

struct GateDecision {
  bool keep = true;
  std::string reason;  // set when discarded
};

GateDecision gate(const std::vector<Constraint>& constraints,
                  const std::string& question, GatePolicy policy,
                  ChatClient* client = nullptr,
                  const PromptTemplate* conflict_tmpl = nullptr);

}  // namespace ifkit
