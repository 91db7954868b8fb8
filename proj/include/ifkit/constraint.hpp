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
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ifkit/error.hpp"

namespace ifkit {

enum class Category { Content, Format, Language, Length };

enum class Subcategory {
  // Content
  Keywords,
  Identifiers,
  Punctuation,
  // Format
  Markdown,
  Json,
  Xml,
  Table,
  // Language
  Chinese,
  English,
  // Length
  Words,
  Sentences,
  Paragraphs,
};

Category category_of(Subcategory sub);

std::string to_string(Category c);
std::string to_string(Subcategory s);
std::optional<Category> category_from_string(const std::string& s);
std::optional<Subcategory> subcategory_from_string(const std::string& s);

enum class MatchMode { WordBoundary, Substring };
enum class Bound { AtMost, AtLeast, Range };
enum class HeadingMode { ContainsLevel, AtLeastDistinct };
enum class XmlScope { Total, PerElementMax };
enum class HanForm { Simplified, Traditional };
enum class CaseMode { AllUppercase, CapitalizedEachWord, AllLowercase };
enum class LengthUnit { Words, Sentences, Paragraphs };

// --- Content specs ---
struct MustInclude {
  std::string phrase;
  MatchMode match_mode = MatchMode::WordBoundary;
  bool case_sensitive = true;
  bool operator==(const MustInclude&) const = default;
};
struct Repeated {
  std::string phrase;
  int min_count = 2;
  MatchMode match_mode = MatchMode::WordBoundary;
  bool case_sensitive = true;
  bool operator==(const Repeated&) const = default;
};
struct Avoid {
  std::string phrase;
  bool case_sensitive = true;
  bool operator==(const Avoid&) const = default;
};
struct StartIdentifier {
  std::string token;
  bool operator==(const StartIdentifier&) const = default;
};
struct EndIdentifier {
  std::string token;
  bool operator==(const EndIdentifier&) const = default;
};
struct DelimitingIdentifier {
  std::string token;
  int min_occurrences = 1;
  bool operator==(const DelimitingIdentifier&) const = default;
};
struct EndingPunctuation {
  std::string ch;  // one codepoint, UTF-8 encoded
  bool operator==(const EndingPunctuation&) const = default;
};
struct ExcludePunctuation {
  std::string ch;
  bool operator==(const ExcludePunctuation&) const = default;
};

// --- Format specs ---
struct HeadingLevels {
  HeadingMode mode = HeadingMode::ContainsLevel;
  int n = 1;  // level for ContainsLevel, distinct-count for AtLeastDistinct
  bool operator==(const HeadingLevels&) const = default;
};
struct BlockQuotes {
  int min_count = 1;
  bool operator==(const BlockQuotes&) const = default;
};
struct JsonNesting {
  Bound bound = Bound::AtLeast;  // Range not used here
  int n = 1;
  bool operator==(const JsonNesting&) const = default;
};
struct XmlAttributes {
  XmlScope scope = XmlScope::Total;
  Bound bound = Bound::AtLeast;
  int n = 0;
  bool operator==(const XmlAttributes&) const = default;
};
struct TableRows {
  Bound bound = Bound::AtMost;
  int n = 1;
  bool operator==(const TableRows&) const = default;
};
struct TableColumns {
  Bound bound = Bound::AtMost;
  int n = 1;
  bool operator==(const TableColumns&) const = default;
};

// --- Language specs ---
struct Script {
  HanForm form = HanForm::Simplified;
  bool operator==(const Script&) const = default;
};
struct Case {
  CaseMode mode = CaseMode::CapitalizedEachWord;
  bool operator==(const Case&) const = default;
};

// --- Length spec, unit given by the subcategory ---
struct LengthCount {
  LengthUnit unit = LengthUnit::Words;
  Bound bound = Bound::AtMost;
  long long lo = 0;                  // AtLeast/Range lower bound, AtMost limit
  std::optional<long long> hi;       // Range upper bound
  bool operator==(const LengthCount&) const = default;
};

using ConstraintSpec =
    std::variant<MustInclude, Repeated, Avoid, StartIdentifier, EndIdentifier,
                 DelimitingIdentifier, EndingPunctuation, ExcludePunctuation,
                 HeadingLevels, BlockQuotes, JsonNesting, XmlAttributes,
                 TableRows, TableColumns, Script, Case, LengthCount>;

Subcategory subcategory_of(const ConstraintSpec& spec);

struct Constraint {
  Category category = Category::Content;
  Subcategory subcategory = Subcategory::Keywords;
  ConstraintSpec spec;
  std::string nl_text;  // optional human-readable rendering

  bool operator==(const Constraint&) const = default;
};

// Builds a constraint with category/subcategory derived from the spec.
Constraint make_constraint(ConstraintSpec spec, std::string nl_text = {});

enum class Pattern { Example, Listing, Incorporation };
enum class DifficultyLevel : int { I = 1, II = 2, III = 3, IV = 4 };

std::string to_string(Pattern p);
std::string to_string(DifficultyLevel l);
std::optional<Pattern> pattern_from_string(const std::string& s);
std::optional<DifficultyLevel> level_from_string(const std::string& s);

struct ExamplePair {
  std::string question;
  std::string answer;
  std::set<Subcategory> subcategories;
  bool operator==(const ExamplePair&) const = default;
};

struct InstructionInstance {
  std::string id;
  std::string core_question;
  std::string rendered_instruction;
  std::vector<Constraint> constraints;
  Pattern pattern = Pattern::Listing;
  DifficultyLevel level = DifficultyLevel::I;
  std::vector<ExamplePair> examples;  // exactly 3 iff pattern == Example

  bool operator==(const InstructionInstance&) const = default;
};

// Throws EmptyConstraintList / ElementCountOutOfRange.
DifficultyLevel compute_difficulty(const std::vector<Constraint>& constraints);

std::set<Category> categories_covered(const std::vector<Constraint>& constraints);
std::set<Subcategory> subcategories_of(const std::vector<Constraint>& constraints);

// Throws InvalidRange / EmptyPhrase / CategoryMismatch on a malformed constraint.
void validate_constraint(const Constraint& c);

// Full instance check: every constraint validates, the recorded level matches
// compute_difficulty, and examples are present exactly for the Example pattern
// with subcategory sets equal to the instance's.
void validate_instance(const InstructionInstance& inst);

}  // namespace ifkit
