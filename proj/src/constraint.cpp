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

#include "ifkit/constraint.hpp"

#include <algorithm>

namespace ifkit {

Category category_of(Subcategory sub) {
  switch (sub) {
    case Subcategory::Keywords:
    case Subcategory::Identifiers:
    case Subcategory::Punctuation:
      return Category::Content;
    case Subcategory::Markdown:
    case Subcategory::Json:
    case Subcategory::Xml:
    case Subcategory::Table:
      return Category::Format;
    case Subcategory::Chinese:
    case Subcategory::English:
      return Category::Language;
    case Subcategory::Words:
    case Subcategory::Sentences:
    case Subcategory::Paragraphs:
      return Category::Length;
  }
  return Category::Content;  // unreachable
}

std::string to_string(Category c) {
  switch (c) {
    case Category::Content: return "Content";
    case Category::Format: return "Format";
    case Category::Language: return "Language";
    case Category::Length: return "Length";
  }
  return "?";
}

std::string to_string(Subcategory s) {
  switch (s) {
    case Subcategory::Keywords: return "Keywords";
    case Subcategory::Identifiers: return "Identifiers";
    case Subcategory::Punctuation: return "Punctuation";
    case Subcategory::Markdown: return "Markdown";
    case Subcategory::Json: return "Json";
    case Subcategory::Xml: return "XML";
    case Subcategory::Table: return "Table";
    case Subcategory::Chinese: return "Chinese";
    case Subcategory::English: return "English";
    case Subcategory::Words: return "Words";
    case Subcategory::Sentences: return "Sentences";
    case Subcategory::Paragraphs: return "Paragraphs";
  }
  return "?";
}

std::optional<Category> category_from_string(const std::string& s) {
  if (s == "Content") return Category::Content;
  if (s == "Format") return Category::Format;
  if (s == "Language") return Category::Language;
  if (s == "Length") return Category::Length;
  return std::nullopt;
}

std::optional<Subcategory> subcategory_from_string(const std::string& s) {
  if (s == "Keywords") return Subcategory::Keywords;
  if (s == "Identifiers") return Subcategory::Identifiers;
  if (s == "Punctuation") return Subcategory::Punctuation;
  if (s == "Markdown") return Subcategory::Markdown;
  if (s == "Json" || s == "JSON") return Subcategory::Json;
  if (s == "XML" || s == "Xml") return Subcategory::Xml;
  if (s == "Table") return Subcategory::Table;
  if (s == "Chinese") return Subcategory::Chinese;
  if (s == "English") return Subcategory::English;
  if (s == "Words") return Subcategory::Words;
  if (s == "Sentences") return Subcategory::Sentences;
  if (s == "Paragraphs") return Subcategory::Paragraphs;
  return std::nullopt;
}

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::Example: return "Example";
    case Pattern::Listing: return "Listing";
    case Pattern::Incorporation: return "Incorporation";
  }
  return "?";
}

std::string to_string(DifficultyLevel l) {
  switch (l) {
    case DifficultyLevel::I: return "I";
    case DifficultyLevel::II: return "II";
    case DifficultyLevel::III: return "III";
    case DifficultyLevel::IV: return "IV";
  }
  return "?";
}

std::optional<Pattern> pattern_from_string(const std::string& s) {
  if (s == "Example") return Pattern::Example;
  if (s == "Listing") return Pattern::Listing;
  if (s == "Incorporation") return Pattern::Incorporation;
  return std::nullopt;
}

std::optional<DifficultyLevel> level_from_string(const std::string& s) {
  if (s == "I") return DifficultyLevel::I;
  if (s == "II") return DifficultyLevel::II;
  if (s == "III") return DifficultyLevel::III;
  if (s == "IV") return DifficultyLevel::IV;
  return std::nullopt;
}

namespace {

struct SubcategoryVisitor {
  Subcategory operator()(const MustInclude&) const { return Subcategory::Keywords; }
  Subcategory operator()(const Repeated&) const { return Subcategory::Keywords; }
  Subcategory operator()(const Avoid&) const { return Subcategory::Keywords; }
  Subcategory operator()(const StartIdentifier&) const { return Subcategory::Identifiers; }
  Subcategory operator()(const EndIdentifier&) const { return Subcategory::Identifiers; }
  Subcategory operator()(const DelimitingIdentifier&) const { return Subcategory::Identifiers; }
  Subcategory operator()(const EndingPunctuation&) const { return Subcategory::Punctuation; }
  Subcategory operator()(const ExcludePunctuation&) const { return Subcategory::Punctuation; }
  Subcategory operator()(const HeadingLevels&) const { return Subcategory::Markdown; }
  Subcategory operator()(const BlockQuotes&) const { return Subcategory::Markdown; }
  Subcategory operator()(const JsonNesting&) const { return Subcategory::Json; }
  Subcategory operator()(const XmlAttributes&) const { return Subcategory::Xml; }
  Subcategory operator()(const TableRows&) const { return Subcategory::Table; }
  Subcategory operator()(const TableColumns&) const { return Subcategory::Table; }
  Subcategory operator()(const Script&) const { return Subcategory::Chinese; }
  Subcategory operator()(const Case&) const { return Subcategory::English; }
  Subcategory operator()(const LengthCount& c) const {
    switch (c.unit) {
      case LengthUnit::Words: return Subcategory::Words;
      case LengthUnit::Sentences: return Subcategory::Sentences;
      case LengthUnit::Paragraphs: return Subcategory::Paragraphs;
    }
    return Subcategory::Words;
  }
};

}  // namespace

Subcategory subcategory_of(const ConstraintSpec& spec) {
  return std::visit(SubcategoryVisitor{}, spec);
}

Constraint make_constraint(ConstraintSpec spec, std::string nl_text) {
  Constraint c;
  c.subcategory = subcategory_of(spec);
  c.category = category_of(c.subcategory);
  c.spec = std::move(spec);
  c.nl_text = std::move(nl_text);
  return c;
}

DifficultyLevel compute_difficulty(const std::vector<Constraint>& constraints) {
  if (constraints.empty()) throw EmptyConstraintList();
  const int k = static_cast<int>(categories_covered(constraints).size());
  const int count = static_cast<int>(constraints.size());
  if (count < k || count > 2 * k) throw ElementCountOutOfRange(k, count);
  return static_cast<DifficultyLevel>(k);
}

std::set<Category> categories_covered(const std::vector<Constraint>& constraints) {
  std::set<Category> out;
  for (const auto& c : constraints) out.insert(c.category);
  return out;
}

std::set<Subcategory> subcategories_of(const std::vector<Constraint>& constraints) {
  std::set<Subcategory> out;
  for (const auto& c : constraints) out.insert(c.subcategory);
  return out;
}

namespace {

void check_positive(long long v, const char* what) {
  if (v <= 0) throw InvalidRange(v, v);
  (void)what;
}

struct ValidateVisitor {
  void operator()(const MustInclude& s) const {
    if (s.phrase.empty()) throw EmptyPhrase();
  }
  void operator()(const Repeated& s) const {
    if (s.phrase.empty()) throw EmptyPhrase();
    check_positive(s.min_count, "min_count");
  }
  void operator()(const Avoid& s) const {
    if (s.phrase.empty()) throw EmptyPhrase();
  }
  void operator()(const StartIdentifier& s) const {
    if (s.token.empty()) throw EmptyPhrase();
  }
  void operator()(const EndIdentifier& s) const {
    if (s.token.empty()) throw EmptyPhrase();
  }
  void operator()(const DelimitingIdentifier& s) const {
    if (s.token.empty()) throw EmptyPhrase();
    check_positive(s.min_occurrences, "min_occurrences");
  }
  void operator()(const EndingPunctuation& s) const {
    if (s.ch.empty()) throw EmptyPhrase();
  }
  void operator()(const ExcludePunctuation& s) const {
    if (s.ch.empty()) throw EmptyPhrase();
  }
  void operator()(const HeadingLevels& s) const {
    if (s.n < 1 || (s.mode == HeadingMode::ContainsLevel && s.n > 6))
      throw InvalidRange(s.n, s.n);
    if (s.mode == HeadingMode::AtLeastDistinct && s.n > 6)
      throw InvalidRange(s.n, s.n);
  }
  void operator()(const BlockQuotes& s) const {
    if (s.min_count < 0) throw InvalidRange(s.min_count, s.min_count);
  }
  void operator()(const JsonNesting& s) const {
    if (s.bound == Bound::Range) throw InvalidRange(s.n, s.n);
    check_positive(s.n, "n");
  }
  void operator()(const XmlAttributes& s) const {
    if (s.bound == Bound::Range) throw InvalidRange(s.n, s.n);
    if (s.n < 0) throw InvalidRange(s.n, s.n);
  }
  void operator()(const TableRows& s) const {
    if (s.bound == Bound::Range) throw InvalidRange(s.n, s.n);
    check_positive(s.n, "n");
  }
  void operator()(const TableColumns& s) const {
    if (s.bound == Bound::Range) throw InvalidRange(s.n, s.n);
    check_positive(s.n, "n");
  }
  void operator()(const Script&) const {}
  void operator()(const Case&) const {}
  void operator()(const LengthCount& s) const {
    if (s.lo < 0) throw InvalidRange(s.lo, s.lo);
    if (s.bound == Bound::Range) {
      if (!s.hi) throw InvalidRange(s.lo, -1);
      if (*s.hi < s.lo) throw InvalidRange(s.lo, *s.hi);
    }
  }
};

}  // namespace

void validate_constraint(const Constraint& c) {
  if (subcategory_of(c.spec) != c.subcategory)
    throw CategoryMismatch("spec variant does not match subcategory " +
                           to_string(c.subcategory));
  if (category_of(c.subcategory) != c.category)
    throw CategoryMismatch("subcategory " + to_string(c.subcategory) +
                           " does not belong to category " +
                           to_string(c.category));
  std::visit(ValidateVisitor{}, c.spec);
}

void validate_instance(const InstructionInstance& inst) {
  for (const auto& c : inst.constraints) validate_constraint(c);
  if (compute_difficulty(inst.constraints) != inst.level)
    throw CategoryMismatch("recorded level does not match constraint list");
  if (inst.pattern == Pattern::Example) {
    if (inst.examples.size() != 3)
      throw CategoryMismatch("Example pattern requires exactly 3 examples");
    const auto subs = subcategories_of(inst.constraints);
    for (const auto& ex : inst.examples) {
      if (ex.question.empty() || ex.answer.empty())
        throw EmptyPhrase();
      if (ex.subcategories != subs)
        throw CategoryMismatch("example subcategory set differs from instance");
    }
  } else if (!inst.examples.empty()) {
    throw CategoryMismatch("examples present for non-Example pattern");
  }
}

}  // namespace ifkit
