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

#include "ifkit/mock_client.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "ifkit/conflict.hpp"
#include "ifkit/error.hpp"
#include "ifkit/nl_spec.hpp"
#include "ifkit/prompts.hpp"

namespace ifkit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Text after a label to the end of its line. Injected fields never span
// lines in the rendered prompts.
std::string field_after(const std::string& prompt, const std::string& label) {
  const size_t at = prompt.find(label);
  if (at == std::string::npos)
    throw ParseError("mock: label not found: " + label);
  const size_t start = at + label.size();
  size_t end = prompt.find('\n', start);
  if (end == std::string::npos) end = prompt.size();
  return trim(prompt.substr(start, end - start));
}

// The bracketed list following the label. Brackets inside tuple text do not
// occur in rendered prompts, so the first ']' closes the list.
std::string bracketed_after(const std::string& prompt,
                            const std::string& label) {
  const size_t at = prompt.find(label);
  if (at == std::string::npos)
    throw ParseError("mock: label not found: " + label);
  const size_t open = prompt.find('[', at + label.size());
  if (open == std::string::npos)
    throw ParseError("mock: list bracket missing after " + label);
  const size_t close = prompt.find(']', open);
  if (close == std::string::npos)
    throw ParseError("mock: list bracket unbalanced after " + label);
  return prompt.substr(open + 1, close - open - 1);
}

std::string expand_response(std::uint64_t seed, const std::string& prompt) {
  const std::string menu_header = field_after(prompt, "[New Constraint List]:");
  const size_t cat_at = menu_header.find("Main Category :");
  if (cat_at == std::string::npos)
    throw ParseError("mock: main category line missing");
  std::istringstream cat_line(menu_header.substr(cat_at + 15));
  std::string cat_word;
  cat_line >> cat_word;
  const auto category = category_from_string(cat_word);
  if (!category) throw ParseError("mock: unknown main category " + cat_word);

  const int count =
      prompt.find("two new constraints are") != std::string::npos ? 2 : 1;
  const std::string original_list =
      bracketed_after(prompt, "[Original Constraint List]:");
  const std::string question = field_after(prompt, "[Original Question]:");
  std::vector<Constraint> constraints = parse_constraint_tuples(original_list);

  // Candidates: menu entries that neither duplicate an existing spec nor
  // conflict with any existing constraint.
  std::vector<Constraint> menu = mock_constraint_menu(*category);
  std::vector<Constraint> candidates;
  for (const auto& item : menu) {
    bool usable = true;
    for (const auto& existing : constraints) {
      if (existing.spec == item.spec || pair_conflict(existing, item)) {
        usable = false;
        break;
      }
    }
    if (usable) candidates.push_back(item);
  }
  if (candidates.empty())
    throw Error("mock: no non-conflicting menu entry left for category " +
                to_string(*category));

  std::mt19937_64 rng(seed ^ std::hash<std::string>{}(
                                 question + "|" + original_list + "|" +
                                 to_string(*category)) ^
                      static_cast<std::uint64_t>(count));
  std::vector<Constraint> picks;
  for (int i = 0; i < count && !candidates.empty(); ++i) {
    std::uniform_int_distribution<size_t> dist(0, candidates.size() - 1);
    const size_t at = dist(rng);
    const Constraint pick = candidates[at];
    candidates.erase(candidates.begin() + at);
    // A second pick must also not conflict with the first.
    candidates.erase(
        std::remove_if(candidates.begin(), candidates.end(),
                       [&](const Constraint& c) {
                         return pair_conflict(pick, c).has_value();
                       }),
        candidates.end());
    picks.push_back(pick);
  }

  std::vector<Constraint> updated = constraints;
  std::string new_question = question;
  for (const auto& p : picks) {
    updated.push_back(p);
    new_question += " " + p.nl_text + ".";
  }

  std::ostringstream out;
  out << "[Thinking Process]: Reviewed the original question and chose "
      << picks.size() << " new constraint(s) from the " << to_string(*category)
      << " category that do not conflict with the existing list.\n\n"
      << "[Updated Constraint List]: [" << constraint_tuple_list(updated)
      << "]\n\n"
      << "[Question with the New Constraint]: " << new_question << "\n";
  return out.str();
}

std::string conflict_response(const std::string& prompt) {
  const std::string list = bracketed_after(prompt, "[Constraint List]:");
  const std::string question = field_after(prompt, "[Question]:");

  bool has_conflict = false;
  bool covers_all = true;
  try {
    const std::vector<Constraint> constraints = parse_constraint_tuples(list);
    has_conflict = detect_conflicts(constraints).has_conflict;
    for (const auto& c : constraints)
      if (question.find(c.nl_text) == std::string::npos) covers_all = false;
  } catch (const Error&) {
    has_conflict = true;
    covers_all = false;
  }

  std::ostringstream out;
  out << "# Constraint Conflict Check #\n"
      << "[Specific Explanation]: Compared every pair of constraints for "
         "mutually unsatisfiable requirements.\n"
      << "[Is there any constraint conflict in the constraints of the data]: "
      << (has_conflict ? "Yes" : "No") << "\n\n"
      << "# Does the Question clearly specify all constraints in the "
         "Constraint List Check #\n"
      << "[Specific Explanation]: Checked that each constraint statement "
         "appears in the question text.\n"
      << "[Does the question include all constraints from the constraint "
         "list]: "
      << (covers_all ? "Yes" : "No") << "\n";
  return out.str();
}

std::string listing_response(const std::string& prompt) {
  const std::string question = field_after(prompt, "[Original Question]:");
  const std::string list = bracketed_after(prompt, "[Constraint List]:");
  const std::vector<Constraint> constraints = parse_constraint_tuples(list);

  // The expanded question carries each constraint sentence verbatim; strip
  // them so the core question stands alone before the rule block.
  std::string core = question;
  for (const auto& c : constraints) {
    const std::string sentence = " " + c.nl_text + ".";
    const size_t at = core.find(sentence);
    if (at != std::string::npos) core.erase(at, sentence.size());
  }

  std::ostringstream out;
  out << "[Constraint List Data]: " << trim(core) << ",\n"
      << "The output must follow the following rules:\n";
  for (size_t i = 0; i < constraints.size(); ++i) {
    out << (i + 1) << ". " << constraints[i].nl_text << ".";
    out << (i + 1 < constraints.size() ? " " : "\n");
  }
  return out.str();
}

std::string incorporation_response(const std::string& prompt) {
  const std::string question = field_after(prompt, "[Original Question]:");
  const std::string list = bracketed_after(prompt, "[Constraint List]:");
  const std::vector<Constraint> constraints = parse_constraint_tuples(list);

  std::string core = question;
  for (const auto& c : constraints) {
    const std::string sentence = " " + c.nl_text + ".";
    const size_t at = core.find(sentence);
    if (at != std::string::npos) core.erase(at, sentence.size());
  }

  std::ostringstream out;
  out << "[Constraint Integration Format Data]: " << trim(core)
      << " When you answer, keep the following in mind:";
  for (const auto& c : constraints) out << " " << c.nl_text << ".";
  out << "\n";
  return out.str();
}

}  // namespace

std::vector<Constraint> mock_constraint_menu(Category category) {
  std::vector<Constraint> menu;
  auto add = [&](ConstraintSpec spec, std::string nl) {
    menu.push_back(make_constraint(std::move(spec), std::move(nl)));
  };
  switch (category) {
    case Category::Content:
      add(MustInclude{"Energy"}, "Must include the keyword 'Energy'");
      add(MustInclude{"Java Programming"},
          "Must include the keyword 'Java Programming'");
      add(Repeated{"Data", 2},
          "The keyword 'Data' must appear at least two times");
      add(Avoid{"Deprecated"}, "Avoid using the keyword 'Deprecated'");
      add(StartIdentifier{"Overview"},
          "The answer must start with the identifier 'Overview'");
      add(EndingPunctuation{"."}, "The answer must end with a period");
      break;
    case Category::Format:
      add(HeadingLevels{HeadingMode::ContainsLevel, 2},
          "The answer must include a level 2 heading");
      add(BlockQuotes{1}, "The answer must include at least one block quote");
      add(JsonNesting{Bound::AtLeast, 2},
          "The answer must contain a JSON object with at least two levels of "
          "nesting");
      add(XmlAttributes{XmlScope::Total, Bound::AtMost, 6},
          "Any XML in the answer must contain at most six attributes in "
          "total");
      add(TableRows{Bound::AtMost, 5},
          "Any table in the answer must have at most five rows");
      add(TableColumns{Bound::AtMost, 4},
          "Any table in the answer must have at most four columns");
      break;
    case Category::Language:
      add(Case{CaseMode::CapitalizedEachWord},
          "The answer must use capitalized letters for each word");
      add(Script{HanForm::Simplified},
          "The answer must be written in Simplified Chinese characters");
      add(Script{HanForm::Traditional},
          "The answer must be written in Traditional Chinese characters");
      break;
    case Category::Length:
      add(LengthCount{LengthUnit::Words, Bound::AtMost, 120},
          "The answer must contain at most 120 words");
      add(LengthCount{LengthUnit::Words, Bound::AtLeast, 40},
          "The answer must contain at least 40 words");
      add(LengthCount{LengthUnit::Sentences, Bound::AtLeast, 3},
          "The answer must contain at least three sentences");
      add(LengthCount{LengthUnit::Sentences, Bound::AtMost, 8},
          "The answer must contain at most eight sentences");
      add(LengthCount{LengthUnit::Paragraphs, Bound::AtMost, 4},
          "The answer must contain at most four paragraphs");
      add(LengthCount{LengthUnit::Paragraphs, Bound::AtLeast, 2},
          "The answer must contain at least two paragraphs");
      break;
  }
  return menu;
}

ChatResponse MockChatClient::send(const ChatRequest& request) {
  if (request.messages.empty())
    throw TransportError("mock: empty message list");
  const std::string& prompt = request.messages.back().content;

  if (prompt.find("[New Constraint List]:") != std::string::npos)
    return ChatResponse{expand_response(seed_, prompt)};
  if (prompt.find("# Constraint Conflict Check #") != std::string::npos)
    return ChatResponse{conflict_response(prompt)};
  if (prompt.find("[Constraint List Data]:") != std::string::npos)
    return ChatResponse{listing_response(prompt)};
  if (prompt.find("[Constraint Integration Format Data]:") !=
      std::string::npos)
    return ChatResponse{incorporation_response(prompt)};
  throw TransportError("mock: unrecognized prompt shape");
}

}  // namespace ifkit
