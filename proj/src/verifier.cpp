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

#include "ifkit/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ifkit/han_script.hpp"
#include "ifkit/structure.hpp"
#include "ifkit/text_stats.hpp"
#include "ifkit/utf8.hpp"

namespace ifkit {

namespace {

CheckResult pass(std::string observed) {
  return CheckResult{true, std::move(observed), ""};
}

CheckResult fail(std::string observed, std::string diagnostic) {
  return CheckResult{false, std::move(observed), std::move(diagnostic)};
}

std::string_view trimmed(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Last non-whitespace codepoint of the text, UTF-8 encoded; empty if none.
std::string last_codepoint(std::string_view text) {
  std::string last;
  size_t i = 0;
  while (i < text.size()) {
    const size_t at = i;
    const char32_t cp = utf8::decode(text, i);
    if (cp != ' ' && cp != '\t' && cp != '\r' && cp != '\n')
      last = std::string(text.substr(at, i - at));
  }
  return last;
}

bool bound_holds(Bound bound, long long value, long long lo,
                 std::optional<long long> hi) {
  switch (bound) {
    case Bound::AtMost: return value <= lo;
    case Bound::AtLeast: return value >= lo;
    case Bound::Range: return value >= lo && value <= hi.value_or(lo);
  }
  return false;
}

std::string bound_text(Bound bound, long long lo, std::optional<long long> hi) {
  switch (bound) {
    case Bound::AtMost: return "at most " + std::to_string(lo);
    case Bound::AtLeast: return "at least " + std::to_string(lo);
    case Bound::Range:
      return "between " + std::to_string(lo) + " and " +
             std::to_string(hi.value_or(lo));
  }
  return "?";
}

struct VerifyVisitor {
  std::string_view text;

  CheckResult operator()(const MustInclude& s) const {
    const long long n =
        count_occurrences(text, s.phrase,
                          s.match_mode == MatchMode::WordBoundary,
                          s.case_sensitive);
    if (n > 0) return pass("found \"" + s.phrase + "\"");
    return fail("0 occurrences",
                "required phrase \"" + s.phrase + "\" not found");
  }
  CheckResult operator()(const Repeated& s) const {
    const long long n =
        count_occurrences(text, s.phrase,
                          s.match_mode == MatchMode::WordBoundary,
                          s.case_sensitive);
    if (n >= s.min_count)
      return pass(std::to_string(n) + " occurrences");
    return fail(std::to_string(n) + " occurrences",
                "phrase \"" + s.phrase + "\" occurs " + std::to_string(n) +
                    " times, need at least " + std::to_string(s.min_count));
  }
  CheckResult operator()(const Avoid& s) const {
    const long long n = count_occurrences(text, s.phrase, false,
                                          s.case_sensitive);
    if (n == 0) return pass("absent");
    return fail(std::to_string(n) + " occurrences",
                "forbidden phrase \"" + s.phrase + "\" present");
  }
  CheckResult operator()(const StartIdentifier& s) const {
    const auto t = trimmed(text);
    if (t.substr(0, s.token.size()) == s.token) return pass("starts with token");
    return fail("different start",
                "text does not start with \"" + s.token + "\"");
  }
  CheckResult operator()(const EndIdentifier& s) const {
    const auto t = trimmed(text);
    if (t.size() >= s.token.size() &&
        t.substr(t.size() - s.token.size()) == s.token)
      return pass("ends with token");
    return fail("different end", "text does not end with \"" + s.token + "\"");
  }
  CheckResult operator()(const DelimitingIdentifier& s) const {
    long long n = 0;
    size_t pos = 0;
    while ((pos = text.find(s.token, pos)) != std::string_view::npos) {
      ++n;
      pos += s.token.size();
    }
    if (n >= s.min_occurrences) return pass(std::to_string(n) + " occurrences");
    return fail(std::to_string(n) + " occurrences",
                "delimiter \"" + s.token + "\" occurs " + std::to_string(n) +
                    " times, need at least " +
                    std::to_string(s.min_occurrences));
  }
  CheckResult operator()(const EndingPunctuation& s) const {
    const std::string last = last_codepoint(text);
    if (last == s.ch) return pass("ends with \"" + last + "\"");
    return fail(last.empty() ? "empty text" : "ends with \"" + last + "\"",
                "text does not end with \"" + s.ch + "\"");
  }
  CheckResult operator()(const ExcludePunctuation& s) const {
    if (text.find(s.ch) == std::string_view::npos) return pass("absent");
    return fail("present", "forbidden character \"" + s.ch + "\" present");
  }
  CheckResult operator()(const HeadingLevels& s) const {
    const auto md = markdown_structure(text);
    if (s.mode == HeadingMode::ContainsLevel) {
      const bool found = std::find(md.heading_levels.begin(),
                                   md.heading_levels.end(),
                                   s.n) != md.heading_levels.end();
      std::string seen = "headings:";
      for (int lvl : md.heading_levels) seen += " " + std::to_string(lvl);
      if (found) return pass(seen);
      return fail(seen, "no level-" + std::to_string(s.n) + " heading found");
    }
    const std::set<int> distinct(md.heading_levels.begin(),
                                 md.heading_levels.end());
    if (static_cast<int>(distinct.size()) >= s.n)
      return pass(std::to_string(distinct.size()) + " distinct levels");
    return fail(std::to_string(distinct.size()) + " distinct levels",
                "need at least " + std::to_string(s.n) +
                    " distinct heading levels");
  }
  CheckResult operator()(const BlockQuotes& s) const {
    const auto md = markdown_structure(text);
    if (md.blockquote_count >= s.min_count)
      return pass(std::to_string(md.blockquote_count) + " block quotes");
    return fail(std::to_string(md.blockquote_count) + " block quotes",
                "need at least " + std::to_string(s.min_count) +
                    " block quotes");
  }
  CheckResult operator()(const JsonNesting& s) const {
    const long long depth = json_max_object_depth(text);
    if (bound_holds(s.bound, depth, s.n, std::nullopt))
      return pass("object depth " + std::to_string(depth));
    return fail("object depth " + std::to_string(depth),
                depth == 0 ? "no JSON value found"
                           : "object nesting depth must be " +
                                 bound_text(s.bound, s.n, std::nullopt));
  }
  CheckResult operator()(const XmlAttributes& s) const {
    const auto stats = xml_attribute_stats(text);
    const long long value = s.scope == XmlScope::Total
                                ? stats.total_attributes
                                : stats.per_element_max;
    const std::string what = s.scope == XmlScope::Total
                                 ? "total attributes"
                                 : "max attributes per element";
    if (bound_holds(s.bound, value, s.n, std::nullopt))
      return pass(what + " = " + std::to_string(value));
    return fail(what + " = " + std::to_string(value),
                what + " must be " + bound_text(s.bound, s.n, std::nullopt));
  }
  CheckResult operator()(const TableRows& s) const {
    const auto md = markdown_structure(text);
    if (md.tables.empty())
      return fail("no tables", "no pipe table found in output");
    for (const auto& [rows, cols] : md.tables) {
      (void)cols;
      if (!bound_holds(s.bound, rows, s.n, std::nullopt))
        return fail(std::to_string(rows) + " rows",
                    "table rows must be " +
                        bound_text(s.bound, s.n, std::nullopt));
    }
    return pass(std::to_string(md.tables.size()) + " table(s) within limit");
  }
  CheckResult operator()(const TableColumns& s) const {
    const auto md = markdown_structure(text);
    if (md.tables.empty())
      return fail("no tables", "no pipe table found in output");
    for (const auto& [rows, cols] : md.tables) {
      (void)rows;
      if (!bound_holds(s.bound, cols, s.n, std::nullopt))
        return fail(std::to_string(cols) + " columns",
                    "table columns must be " +
                        bound_text(s.bound, s.n, std::nullopt));
    }
    return pass(std::to_string(md.tables.size()) + " table(s) within limit");
  }
  CheckResult operator()(const Script& s) const {
    const HanScript got = classify_han_script(text);
    const HanScript want = s.form == HanForm::Simplified
                               ? HanScript::Simplified
                               : HanScript::Traditional;
    auto name = [](HanScript h) {
      switch (h) {
        case HanScript::Simplified: return "simplified";
        case HanScript::Traditional: return "traditional";
        case HanScript::Mixed: return "mixed";
        case HanScript::None: return "none";
      }
      return "?";
    };
    if (got == want) return pass(name(got));
    return fail(name(got), std::string("expected ") + name(want) +
                               " Chinese script, detected " + name(got));
  }
  CheckResult operator()(const Case& s) const {
    return check_english_case(s.mode, text);
  }
  CheckResult operator()(const LengthCount& s) const {
    long long value = 0;
    std::string what;
    switch (s.unit) {
      case LengthUnit::Words:
        value = count_words(text);
        what = "words";
        break;
      case LengthUnit::Sentences:
        value = count_sentences(text);
        what = "sentences";
        break;
      case LengthUnit::Paragraphs:
        value = count_paragraphs(text);
        what = "paragraphs";
        break;
    }
    const std::string observed = std::to_string(value) + " " + what;
    if (bound_holds(s.bound, value, s.lo, s.hi)) return pass(observed);
    return fail(observed,
                what + " must be " + bound_text(s.bound, s.lo, s.hi));
  }
};

}  // namespace

CheckResult check_english_case(CaseMode mode, std::string_view text) {
  switch (mode) {
    case CaseMode::AllUppercase: {
      for (char c : text)
        if (std::islower(static_cast<unsigned char>(c)))
          return fail("lowercase letter present",
                      "all cased letters must be uppercase");
      return pass("no lowercase letters");
    }
    case CaseMode::AllLowercase: {
      for (char c : text)
        if (std::isupper(static_cast<unsigned char>(c)))
          return fail("uppercase letter present",
                      "all cased letters must be lowercase");
      return pass("no uppercase letters");
    }
    case CaseMode::CapitalizedEachWord: {
      // First cased character of each whitespace token must be uppercase.
      bool at_token_start = true;
      bool token_cased_seen = false;
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          at_token_start = true;
          token_cased_seen = false;
          continue;
        }
        if (at_token_start || !token_cased_seen) {
          if (std::islower(static_cast<unsigned char>(c)))
            return fail("word starting lowercase",
                        "each word must start with an uppercase letter");
          if (std::isupper(static_cast<unsigned char>(c)))
            token_cased_seen = true;
        }
        at_token_start = false;
      }
      return pass("every word capitalized");
    }
  }
  return fail("?", "unknown case mode");
}

CheckResult verify(const Constraint& c, std::string_view output) {
  return std::visit(VerifyVisitor{output}, c.spec);
}

VerificationReport verify_all(const std::vector<Constraint>& constraints,
                              std::string_view output) {
  if (constraints.empty()) throw EmptyConstraintList();
  VerificationReport report;
  report.total = static_cast<int>(constraints.size());
  for (const auto& c : constraints) {
    CheckResult r = verify(c, output);
    if (r.satisfied) ++report.satisfied_count;
    report.results.emplace_back(c, std::move(r));
  }
  report.all_satisfied = report.satisfied_count == report.total;
  return report;
}

}  // namespace ifkit
