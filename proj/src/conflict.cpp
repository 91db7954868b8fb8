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

#include "ifkit/conflict.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace ifkit {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max();

struct Interval {
  long long lo = 0;
  long long hi = kInf;
  bool empty_with(const Interval& other) const {
    return std::max(lo, other.lo) > std::min(hi, other.hi);
  }
};

Interval count_interval(Bound bound, long long lo, std::optional<long long> hi) {
  switch (bound) {
    case Bound::AtMost: return {0, lo};
    case Bound::AtLeast: return {lo, kInf};
    case Bound::Range: return {lo, hi.value_or(lo)};
  }
  return {};
}

bool has_upper(const std::string& s) {
  for (char c : s)
    if (std::isupper(static_cast<unsigned char>(c))) return true;
  return false;
}

bool has_lower(const std::string& s) {
  for (char c : s)
    if (std::islower(static_cast<unsigned char>(c))) return true;
  return false;
}

// True when some whitespace token of the phrase has a lowercase first cased
// character, which a capitalized-each-word output can never contain at a
// word boundary.
bool breaks_capitalization(const std::string& phrase) {
  bool token_cased_seen = false;
  bool at_start = true;
  for (char c : phrase) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      at_start = true;
      token_cased_seen = false;
      continue;
    }
    if ((at_start || !token_cased_seen)) {
      if (std::islower(static_cast<unsigned char>(c))) return true;
      if (std::isupper(static_cast<unsigned char>(c))) token_cased_seen = true;
    }
    at_start = false;
  }
  return false;
}

// Presence-required phrase of a content constraint, if any, plus whether its
// occurrences are anchored at word boundaries.
struct RequiredPhrase {
  std::string phrase;
  bool word_boundary = false;
};

std::optional<RequiredPhrase> required_phrase(const Constraint& c) {
  if (const auto* m = std::get_if<MustInclude>(&c.spec))
    return RequiredPhrase{m->phrase, m->match_mode == MatchMode::WordBoundary};
  if (const auto* r = std::get_if<Repeated>(&c.spec))
    return RequiredPhrase{r->phrase, r->match_mode == MatchMode::WordBoundary};
  if (const auto* s = std::get_if<StartIdentifier>(&c.spec))
    return RequiredPhrase{s->token, true};
  if (const auto* e = std::get_if<EndIdentifier>(&c.spec))
    return RequiredPhrase{e->token, false};
  if (const auto* d = std::get_if<DelimitingIdentifier>(&c.spec))
    return RequiredPhrase{d->token, false};
  return std::nullopt;
}

std::optional<std::string> avoided_phrase(const Constraint& c) {
  if (const auto* a = std::get_if<Avoid>(&c.spec)) return a->phrase;
  return std::nullopt;
}

const char* case_name(CaseMode m) {
  switch (m) {
    case CaseMode::AllUppercase: return "all-uppercase";
    case CaseMode::CapitalizedEachWord: return "capitalized-each-word";
    case CaseMode::AllLowercase: return "all-lowercase";
  }
  return "?";
}

// One-directional rules; pair_conflict tries both orders.
std::optional<std::string> ordered_conflict(const Constraint& a,
                                            const Constraint& b) {
  // (a) mutually exclusive English case modes
  if (const auto* ca = std::get_if<Case>(&a.spec)) {
    if (const auto* cb = std::get_if<Case>(&b.spec)) {
      const bool exclusive =
          ca->mode != cb->mode &&
          (ca->mode == CaseMode::AllLowercase ||
           cb->mode == CaseMode::AllLowercase);
      if (exclusive)
        return std::string("mutually exclusive case modes: ") +
               case_name(ca->mode) + " vs " + case_name(cb->mode);
    }
    // (b) English case vs Chinese script: the output language cannot be both
    if (std::holds_alternative<Script>(b.spec))
      return std::string("English case requirement conflicts with a Chinese "
                         "script requirement");
  }

  // Chinese simplified vs traditional
  if (const auto* sa = std::get_if<Script>(&a.spec)) {
    if (const auto* sb = std::get_if<Script>(&b.spec)) {
      if (sa->form != sb->form)
        return std::string(
            "simplified and traditional script cannot both be required");
    }
  }

  // (c) length windows on the same unit
  if (const auto* la = std::get_if<LengthCount>(&a.spec)) {
    if (const auto* lb = std::get_if<LengthCount>(&b.spec)) {
      if (la->unit == lb->unit &&
          count_interval(la->bound, la->lo, la->hi)
              .empty_with(count_interval(lb->bound, lb->lo, lb->hi)))
        return std::string("no count satisfies both length windows");
    }
  }

  // (d) include vs avoid of the same phrase
  if (auto req = required_phrase(a)) {
    if (auto avoid = avoided_phrase(b)) {
      if (req->phrase == *avoid)
        return "phrase \"" + req->phrase + "\" both required and forbidden";
    }
    // phrase letters vs case mode
    if (const auto* cb = std::get_if<Case>(&b.spec)) {
      if (cb->mode == CaseMode::AllLowercase && has_upper(req->phrase))
        return "required phrase \"" + req->phrase +
               "\" contains uppercase letters but the output must be "
               "all-lowercase";
      if (cb->mode == CaseMode::AllUppercase && has_lower(req->phrase))
        return "required phrase \"" + req->phrase +
               "\" contains lowercase letters but the output must be "
               "all-uppercase";
      if (cb->mode == CaseMode::CapitalizedEachWord && req->word_boundary &&
          breaks_capitalization(req->phrase))
        return "required phrase \"" + req->phrase +
               "\" starts a word with a lowercase letter but each word must "
               "be capitalized";
    }
    // required phrase containing an excluded character
    if (const auto* xb = std::get_if<ExcludePunctuation>(&b.spec)) {
      if (req->phrase.find(xb->ch) != std::string::npos)
        return "required phrase \"" + req->phrase +
               "\" contains the excluded character \"" + xb->ch + "\"";
    }
  }

  // (e) ending vs excluded punctuation
  if (const auto* ea = std::get_if<EndingPunctuation>(&a.spec)) {
    if (const auto* xb = std::get_if<ExcludePunctuation>(&b.spec)) {
      if (ea->ch == xb->ch)
        return "character \"" + ea->ch +
               "\" must end the text but is excluded";
    }
    if (auto avoid = avoided_phrase(b)) {
      if (*avoid == ea->ch)
        return "ending punctuation \"" + ea->ch + "\" is also forbidden";
    }
  }

  // (f) structural bounds on the same quantity
  if (const auto* ta = std::get_if<TableRows>(&a.spec)) {
    if (const auto* tb = std::get_if<TableRows>(&b.spec)) {
      if (count_interval(ta->bound, ta->n, std::nullopt)
              .empty_with(count_interval(tb->bound, tb->n, std::nullopt)))
        return std::string("no table row count satisfies both bounds");
    }
  }
  if (const auto* ta = std::get_if<TableColumns>(&a.spec)) {
    if (const auto* tb = std::get_if<TableColumns>(&b.spec)) {
      if (count_interval(ta->bound, ta->n, std::nullopt)
              .empty_with(count_interval(tb->bound, tb->n, std::nullopt)))
        return std::string("no table column count satisfies both bounds");
    }
  }
  if (const auto* ja = std::get_if<JsonNesting>(&a.spec)) {
    if (const auto* jb = std::get_if<JsonNesting>(&b.spec)) {
      if (count_interval(ja->bound, ja->n, std::nullopt)
              .empty_with(count_interval(jb->bound, jb->n, std::nullopt)))
        return std::string("no JSON nesting depth satisfies both bounds");
    }
  }
  if (const auto* xa = std::get_if<XmlAttributes>(&a.spec)) {
    if (const auto* xb = std::get_if<XmlAttributes>(&b.spec)) {
      if (xa->scope == xb->scope &&
          count_interval(xa->bound, xa->n, std::nullopt)
              .empty_with(count_interval(xb->bound, xb->n, std::nullopt)))
        return std::string("no XML attribute count satisfies both bounds");
    }
  }

  return std::nullopt;
}

}  // namespace

std::optional<std::string> pair_conflict(const Constraint& a,
                                         const Constraint& b) {
  if (auto r = ordered_conflict(a, b)) return r;
  return ordered_conflict(b, a);
}

ConflictReport detect_conflicts(const std::vector<Constraint>& constraints) {
  ConflictReport report;
  for (size_t i = 0; i < constraints.size(); ++i) {
    for (size_t j = i + 1; j < constraints.size(); ++j) {
      if (auto reason = pair_conflict(constraints[i], constraints[j])) {
        report.conflicts.push_back(
            {static_cast<int>(i), static_cast<int>(j), *reason});
      }
    }
  }
  report.has_conflict = !report.conflicts.empty();
  return report;
}

namespace {

// Finds the Yes/No value following the given field label.
std::optional<bool> parse_yes_no_field(const std::string& raw,
                                       const std::string& label) {
  const size_t at = raw.find(label);
  if (at == std::string::npos) return std::nullopt;
  size_t colon = raw.find(':', at + label.size());
  if (colon == std::string::npos) return std::nullopt;
  const size_t eol = raw.find('\n', colon);
  const std::string tail =
      raw.substr(colon + 1, (eol == std::string::npos ? raw.size() : eol) -
                                colon - 1);
  if (tail.find("Yes") != std::string::npos) return true;
  if (tail.find("No") != std::string::npos) return false;
  return std::nullopt;
}

}  // namespace

LlmConflictVerdict parse_conflict_response(const std::string& raw) {
  const auto conflict =
      parse_yes_no_field(raw, "[Is there any constraint conflict");
  if (!conflict)
    throw ParseError("constraint-conflict Yes/No field missing", raw);
  const auto covers =
      parse_yes_no_field(raw, "[Does the question include all constraints");
  if (!covers)
    throw ParseError("question-coverage Yes/No field missing", raw);
  LlmConflictVerdict v;
  v.constraint_conflict = *conflict;
  v.question_covers_all = *covers;
  v.explanations = raw;
  return v;
}

LlmConflictVerdict llm_conflict_check(ChatClient& client,
                                      const PromptTemplate& tmpl,
                                      const std::vector<Constraint>& constraints,
                                      const std::string& question) {
  ChatRequest req;
  req.messages.push_back(
      {"user", render_conflict_prompt(tmpl, constraints, question)});
  const ChatResponse resp = client.send(req);
  return parse_conflict_response(resp.text);
}

GateDecision gate(const std::vector<Constraint>& constraints,
                  const std::string& question, GatePolicy policy,
                  ChatClient* client, const PromptTemplate* conflict_tmpl) {
  const ConflictReport report = detect_conflicts(constraints);
  if (report.has_conflict)
    return {false, "rule conflict: " + report.conflicts.front().reason};
  if (policy == GatePolicy::RulesThenLlm) {
    if (client == nullptr || conflict_tmpl == nullptr)
      throw Error("rules-then-llm gate requires a client and template");
    const LlmConflictVerdict verdict =
        llm_conflict_check(*client, *conflict_tmpl, constraints, question);
    if (verdict.constraint_conflict)
      return {false, "llm verdict: constraint conflict"};
    if (!verdict.question_covers_all)
      return {false, "llm verdict: question does not cover all constraints"};
  }
  return {true, ""};
}

}  // namespace ifkit
