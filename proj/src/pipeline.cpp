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

#include "ifkit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifkit/error.hpp"
#include "ifkit/nl_spec.hpp"

namespace ifkit {

PromptTemplates load_templates(const std::string& dir) {
  return PromptTemplates{
      load_template(dir, TemplateName::Expand),
      load_template(dir, TemplateName::Conflict),
      load_template(dir, TemplateName::RewriteListing),
      load_template(dir, TemplateName::RewriteIncorporation)};
}

std::vector<const ExamplePair*> ExamplePool::matching(
    const std::set<Subcategory>& subcategories) const {
  std::vector<const ExamplePair*> out;
  for (const auto& p : pairs)
    if (p.subcategories == subcategories) out.push_back(&p);
  return out;
}

PickedExpansion pick_expansion(const ExpansionState& state,
                               std::mt19937_64& rng, bool add_two) {
  const std::set<Category> covered = categories_covered(state.constraints);
  std::vector<Category> uncovered;
  for (Category c : {Category::Content, Category::Format, Category::Language,
                     Category::Length})
    if (!covered.count(c)) uncovered.push_back(c);
  if (uncovered.empty()) throw AllCategoriesCovered();
  std::uniform_int_distribution<size_t> dist(0, uncovered.size() - 1);
  return PickedExpansion{uncovered[dist(rng)], add_two ? 2 : 1};
}

std::vector<Pattern> assign_patterns(std::size_t n,
                                     const std::map<Pattern, double>& mix,
                                     std::uint64_t seed) {
  double sum = 0.0;
  for (const auto& [p, f] : mix) {
    if (f < 0.0) throw InvalidConfig("pattern_mix");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidConfig("pattern_mix");

  // Largest-remainder apportionment, ties broken by enum order.
  struct Share {
    Pattern pattern;
    std::size_t count;
    double remainder;
  };
  std::vector<Share> shares;
  std::size_t assigned = 0;
  for (Pattern p :
       {Pattern::Example, Pattern::Listing, Pattern::Incorporation}) {
    auto it = mix.find(p);
    const double frac = it == mix.end() ? 0.0 : it->second;
    const double exact = frac * static_cast<double>(n);
    const auto base = static_cast<std::size_t>(std::floor(exact + 1e-9));
    shares.push_back({p, base, exact - static_cast<double>(base)});
    assigned += base;
  }
  std::vector<std::size_t> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shares[a].remainder > shares[b].remainder;
  });
  for (std::size_t i = 0; assigned < n; ++i, ++assigned)
    ++shares[order[i % order.size()]].count;

  std::vector<Pattern> out;
  out.reserve(n);
  for (const auto& s : shares)
    out.insert(out.end(), s.count, s.pattern);
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5DEADBEEFULL);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string reply_field(const std::string& raw, const std::string& label) {
  const size_t at = raw.find(label);
  if (at == std::string::npos)
    throw ParseError("reply label missing: " + label, raw);
  return trim(raw.substr(at + label.size()));
}

// The token whose presence marks a constraint as surfaced in a rewritten
// instruction. Falls back to the full nl text when checked.
std::string key_token(const Constraint& c) {
  struct Visitor {
    std::string operator()(const MustInclude& s) const { return s.phrase; }
    std::string operator()(const Repeated& s) const { return s.phrase; }
    std::string operator()(const Avoid& s) const { return s.phrase; }
    std::string operator()(const StartIdentifier& s) const { return s.token; }
    std::string operator()(const EndIdentifier& s) const { return s.token; }
    std::string operator()(const DelimitingIdentifier& s) const {
      return s.token;
    }
    std::string operator()(const EndingPunctuation& s) const { return s.ch; }
    std::string operator()(const ExcludePunctuation& s) const { return s.ch; }
    std::string operator()(const HeadingLevels&) const { return "heading"; }
    std::string operator()(const BlockQuotes&) const { return "quote"; }
    std::string operator()(const JsonNesting&) const { return "nest"; }
    std::string operator()(const XmlAttributes&) const { return "attribute"; }
    std::string operator()(const TableRows&) const { return "row"; }
    std::string operator()(const TableColumns&) const { return "column"; }
    std::string operator()(const Script&) const { return "Chinese"; }
    std::string operator()(const Case& s) const {
      switch (s.mode) {
        case CaseMode::AllUppercase: return "uppercase";
        case CaseMode::CapitalizedEachWord: return "capitalized";
        case CaseMode::AllLowercase: return "lowercase";
      }
      return "";
    }
    std::string operator()(const LengthCount& s) const {
      switch (s.unit) {
        case LengthUnit::Words: return "word";
        case LengthUnit::Sentences: return "sentence";
        case LengthUnit::Paragraphs: return "paragraph";
      }
      return "";
    }
  };
  return std::visit(Visitor{}, c.spec);
}

}  // namespace

std::string rewrite_listing(ChatClient& client, const PromptTemplate& tmpl,
                            const std::vector<Constraint>& constraints,
                            const std::string& question) {
  if (constraints.empty()) throw EmptyConstraintList();
  ChatRequest req;
  req.messages.push_back(
      {"user", render_rewrite_prompt(tmpl, constraints, question)});
  const std::string raw = client.send(req).text;
  const std::string text = reply_field(raw, "[Constraint List Data]:");
  if (text.find("The output must follow the following rules:") ==
      std::string::npos)
    throw FormatError("listing reply lacks the rules header");
  return text;
}

std::string rewrite_incorporation(ChatClient& client,
                                  const PromptTemplate& tmpl,
                                  const std::vector<Constraint>& constraints,
                                  const std::string& question) {
  if (constraints.empty()) throw EmptyConstraintList();
  ChatRequest req;
  req.messages.push_back(
      {"user", render_rewrite_prompt(tmpl, constraints, question)});
  const std::string raw = client.send(req).text;
  const std::string text =
      reply_field(raw, "[Constraint Integration Format Data]:");
  std::vector<int> missing;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    const std::string token = key_token(c);
    const bool has_token =
        !token.empty() && text.find(token) != std::string::npos;
    const bool has_nl =
        !c.nl_text.empty() && text.find(c.nl_text) != std::string::npos;
    if (!has_token && !has_nl) missing.push_back(static_cast<int>(i));
  }
  if (!missing.empty())
    throw CoverageError("incorporation reply omits constraint parameters",
                        missing);
  return text;
}

std::vector<ExamplePair> pick_examples(const ExamplePool& pool,
                                       const std::set<Subcategory>& subcats,
                                       std::mt19937_64& rng) {
  std::vector<const ExamplePair*> candidates = pool.matching(subcats);
  if (candidates.size() < 3)
    throw InsufficientExamples(3, static_cast<int>(candidates.size()));
  std::vector<ExamplePair> chosen;
  for (int i = 0; i < 3; ++i) {
    std::uniform_int_distribution<size_t> dist(0, candidates.size() - 1);
    const size_t at = dist(rng);
    chosen.push_back(*candidates[at]);
    candidates.erase(candidates.begin() + at);
  }
  return chosen;
}

std::string render_example_instruction(
    const std::string& question, const std::vector<ExamplePair>& examples) {
  std::ostringstream out;
  out << question << "\n";
  for (size_t i = 0; i < examples.size(); ++i) {
    out << "\n# Example " << (i + 1) << ":\n"
        << "**Question**: " << examples[i].question << "\n"
        << "**Answer**: " << examples[i].answer << "\n";
  }
  return out.str();
}

namespace {

// One question's four expansion steps with snapshots. Throws on any fault;
// run_pipeline turns that into a skip.
std::vector<InstructionInstance> expand_one_question(
    std::size_t qi, const std::string& question, const PipelineConfig& config,
    ChatClient& client, const PromptTemplates& templates,
    const ExamplePool* pool, const std::vector<Pattern>& patterns) {
  ExpansionState state;
  state.core_question = question;
  state.current_question = question;
  state.rng_seed = config.seed * 0x9E3779B97F4A7C15ULL + qi + 1;
  std::mt19937_64 rng(state.rng_seed);

  std::vector<InstructionInstance> out;
  for (int level = 1; level <= 4; ++level) {
    // Candidate categories in a seeded order; later entries are fallbacks
    // when the gate rejects an expansion.
    const std::set<Category> covered = categories_covered(state.constraints);
    std::vector<Category> uncovered;
    for (Category c : {Category::Content, Category::Format, Category::Language,
                       Category::Length})
      if (!covered.count(c)) uncovered.push_back(c);
    if (uncovered.empty()) throw AllCategoriesCovered();
    std::shuffle(uncovered.begin(), uncovered.end(), rng);

    bool accepted = false;
    std::string last_reason = "no candidate category";
    for (Category category : uncovered) {
      const bool add_two =
          category != Category::Language && (rng() & 1u) == 1u;
      try {
        ChatRequest req;
        req.messages.push_back(
            {"user", render_expand_prompt(templates.expand, category,
                                          add_two ? 2 : 1, state.constraints,
                                          state.current_question)});
        const ParsedExpansion parsed =
            parse_expand_response(client.send(req).text);

        const DifficultyLevel got = compute_difficulty(parsed.constraints);
        if (static_cast<int>(got) != level) {
          last_reason = "expansion produced level " + to_string(got) +
                        " instead of " + std::to_string(level);
          continue;
        }
        const GateDecision decision =
            gate(parsed.constraints, parsed.question, config.gate_policy,
                 &client, &templates.conflict);
        if (!decision.keep) {
          last_reason = decision.reason;
          continue;
        }
        state.constraints = parsed.constraints;
        state.current_question = parsed.question;
        accepted = true;
        break;
      } catch (const Error& e) {
        last_reason = e.what();
      }
    }
    if (!accepted)
      throw Error("level " + std::to_string(level) +
                  " expansion rejected: " + last_reason);

    InstructionInstance inst;
    inst.id = "q" + std::to_string(qi + 1) + "-L" +
              to_string(static_cast<DifficultyLevel>(level));
    inst.core_question = state.core_question;
    inst.constraints = state.constraints;
    inst.level = static_cast<DifficultyLevel>(level);
    inst.pattern = patterns[qi * 4 + static_cast<std::size_t>(level - 1)];
    switch (inst.pattern) {
      case Pattern::Listing:
        inst.rendered_instruction = rewrite_listing(
            client, templates.listing, state.constraints,
            state.current_question);
        break;
      case Pattern::Incorporation:
        inst.rendered_instruction = rewrite_incorporation(
            client, templates.incorporation, state.constraints,
            state.current_question);
        break;
      case Pattern::Example: {
        if (pool == nullptr) throw InsufficientExamples(3, 0);
        inst.examples =
            pick_examples(*pool, subcategories_of(state.constraints), rng);
        inst.rendered_instruction =
            render_example_instruction(state.current_question, inst.examples);
        break;
      }
    }
    validate_instance(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

GenerationResult run_pipeline(const std::vector<std::string>& questions,
                              const PipelineConfig& config, ChatClient& client,
                              const PromptTemplates& templates,
                              const ExamplePool* pool) {
  const std::vector<Pattern> patterns =
      assign_patterns(questions.size() * 4, config.pattern_mix, config.seed);
  GenerationResult result;
  for (std::size_t qi = 0; qi < questions.size(); ++qi) {
    try {
      auto instances = expand_one_question(qi, questions[qi], config, client,
                                           templates, pool, patterns);
      for (auto& inst : instances) result.instances.push_back(std::move(inst));
    } catch (const Error& e) {
      ++result.questions_skipped;
      result.skip_reasons.push_back("q" + std::to_string(qi + 1) + ": " +
                                    e.what());
    }
  }
  return result;
}

}  // namespace ifkit
