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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifkit/constraint.hpp"
#include "ifkit/verifier.hpp"

namespace ifkit {

struct OutputRecord {
  std::string instance_id;
  std::string output_text;
  std::string model_tag;
};

struct EvalRecord {
  std::string instance_id;
  Pattern pattern = Pattern::Listing;
  DifficultyLevel level = DifficultyLevel::I;
  std::string model_tag;
  VerificationReport report;

  bool pass() const { return report.all_satisfied; }
};

// Percentage rounded half-up to 2 decimals, as presented in reports.
double round_percent(double percent);

struct ReportCell {
  long long passed = 0;
  long long total = 0;
  // Empty when no record contributes to the cell.
  std::optional<double> percent() const;
};

struct DimensionalReport {
  std::map<Pattern, ReportCell> by_pattern;
  std::map<Category, ReportCell> by_category;
  std::map<DifficultyLevel, ReportCell> by_level;
  ReportCell overall;
};

// Throws UnknownInstance when the output references a different instance id.
EvalRecord score_instance(const InstructionInstance& instance,
                          const std::string& output_text,
                          const std::string& model_tag = {});

// The RL reward: number of satisfied constraints, in [0, 8].
int reward(const InstructionInstance& instance, const std::string& output_text);

// Pattern and level cells count whole-record passes. A category cell counts,
// among records holding at least one constraint of that category, those where
// every constraint of that category is satisfied. Throws EmptyRecordSet.
DimensionalReport aggregate(const std::vector<EvalRecord>& records);

enum class ReportFormat { Plain, Csv, Markdown };

// One row per model tag, columns ordered Example, Listing, Incorporation,
// Content, Format, Language, Length, I, II, III, IV, Overall. Cells with no
// contributing records render as an em dash.
std::string render_report(
    const std::vector<std::pair<std::string, DimensionalReport>>& rows,
    ReportFormat format);

// Removes every delimited reasoning block before scoring.
std::string strip_reasoning(const std::string& text,
                            const std::string& open = "<think>",
                            const std::string& close = "</think>");

// Joins outputs to instances by id, scores, aggregates per model tag (tags
// sorted). Throws MissingOutputs listing instance ids with no output.
std::vector<std::pair<std::string, DimensionalReport>> run_eval(
    const std::vector<InstructionInstance>& instances,
    const std::vector<OutputRecord>& outputs);

}  // namespace ifkit
