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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ifkit/chat_client.hpp"
#include "ifkit/conflict.hpp"
#include "ifkit/constraint.hpp"
#include "ifkit/prompts.hpp"

namespace ifkit {

struct PromptTemplates {
  PromptTemplate expand;
  PromptTemplate conflict;
  PromptTemplate listing;
  PromptTemplate incorporation;
};

PromptTemplates load_templates(const std::string& dir);

struct ExpansionState {
  std::string core_question;
  std::string current_question;
  std::vector<Constraint> constraints;
  std::map<DifficultyLevel, InstructionInstance> level_snapshots;
  std::uint64_t rng_seed = 0;
};

// Example-pattern source. Lookup matches on the exact subcategory set.
struct ExamplePool {
  std::vector<ExamplePair> pairs;

  std::vector<const ExamplePair*> matching(
      const std::set<Subcategory>& subcategories) const;
};

struct PipelineConfig {
  std::uint64_t seed = 0;
  GatePolicy gate_policy = GatePolicy::RulesOnly;
  // Fractions per pattern, must sum to 1 within 1e-9.
  std::map<Pattern, double> pattern_mix = {{Pattern::Listing, 0.5},
                                           {Pattern::Incorporation, 0.5}};
  int gate_retries_per_step = 3;
};

struct PickedExpansion {
  Category category;
  int count = 1;  // 1 or 2
};

// Uniform pick among categories not yet covered. count = 2 iff add_two.
// Throws AllCategoriesCovered once all four are present.
PickedExpansion pick_expansion(const ExpansionState& state, std::mt19937_64& rng,
                               bool add_two);

// Exact largest-remainder pattern counts, assigned in a seeded shuffle order.
std::vector<Pattern> assign_patterns(std::size_t n,
                                     const std::map<Pattern, double>& mix,
                                     std::uint64_t seed);

// Rewrites the expanded question into the numbered-rules form. Throws
// FormatError when the reply lacks the literal rules header.
std::string rewrite_listing(ChatClient& client, const PromptTemplate& tmpl,
                            const std::vector<Constraint>& constraints,
                            const std::string& question);

// Rewrites into a single prose question. Each constraint must surface either
// its key parameter token or its full nl text; otherwise CoverageError with
// the missing constraint indices.
std::string rewrite_incorporation(ChatClient& client,
                                  const PromptTemplate& tmpl,
                                  const std::vector<Constraint>& constraints,
                                  const std::string& question);

// Builds the Example-pattern instruction text: three pool pairs whose
// subcategory set equals the instance's, chosen without replacement. Throws
// InsufficientExamples(3, found).
std::vector<ExamplePair> pick_examples(const ExamplePool& pool,
                                       const std::set<Subcategory>& subcats,
                                       std::mt19937_64& rng);
std::string render_example_instruction(const std::string& question,
                                       const std::vector<ExamplePair>& examples);

struct GenerationResult {
  std::vector<InstructionInstance> instances;
  int questions_skipped = 0;
  std::vector<std::string> skip_reasons;
};

// Runs four expansion steps per question (one new category each), gates every
// step, snapshots Levels I through IV, and rewrites each snapshot into its
// assigned pattern. Per-question failures are recorded and skipped; only
// config or template faults abort the run.
GenerationResult run_pipeline(const std::vector<std::string>& questions,
                              const PipelineConfig& config, ChatClient& client,
                              const PromptTemplates& templates,
                              const ExamplePool* pool = nullptr);

}  // namespace ifkit
