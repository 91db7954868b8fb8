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

// End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
// the process exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ifkit/conflict.hpp"
#include "ifkit/eval.hpp"
#include "ifkit/han_script.hpp"
#include "ifkit/mock_client.hpp"
#include "ifkit/pipeline.hpp"
#include "ifkit/prompts.hpp"
#include "ifkit/service.hpp"
#include "ifkit/storage.hpp"
#include "ifkit/structure.hpp"
#include "ifkit/text_stats.hpp"
#include "ifkit/utf8.hpp"
#include "ifkit/verifier.hpp"

#include "generators.hpp"
#include "golden_fixtures.hpp"

using namespace ifkit;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------- criterion 1

// One representative spec per category, cloned as needed.
ConstraintSpec spec_for_category(Category category, int salt) {
  switch (category) {
    case Category::Content:
      return MustInclude{"Token" + std::to_string(salt)};
    case Category::Format:
      return HeadingLevels{HeadingMode::ContainsLevel, 1 + salt % 3};
    case Category::Language:
      return Case{CaseMode::CapitalizedEachWord};
    case Category::Length:
      return LengthCount{LengthUnit::Words, Bound::AtMost, 10 + salt};
  }
  return MustInclude{"x"};
}

Check criterion_difficulty() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  const Category categories[4] = {Category::Content, Category::Format,
                                  Category::Language, Category::Length};
  for (int k = 1; k <= 4; ++k) {
    for (int e = 1; e <= 8; ++e) {
      // A list cannot span more categories than it has elements.
      const int c = std::min(k, e);
      std::vector<Constraint> list;
      for (int i = 0; i < e; ++i)
        list.push_back(make_constraint(spec_for_category(categories[i % c], i)));
      const bool in_window = e >= c && e <= 2 * c;
      try {
        const DifficultyLevel level = compute_difficulty(list);
        check.require(in_window, "unexpected success at k=" + std::to_string(k) +
                                     " e=" + std::to_string(e));
        check.require(static_cast<int>(level) == c,
                      "wrong level at k=" + std::to_string(k) +
                          " e=" + std::to_string(e));
      } catch (const ElementCountOutOfRange&) {
        check.require(!in_window, "unexpected error at k=" + std::to_string(k) +
                                      " e=" + std::to_string(e));
      }
    }
  }
  check.require(elapsed_seconds(start) < 1.0, "exceeded 1s");
  return check;
}

// ------------------------------------------------------------ criteria 2 and 3

EvalRecord flat_record(Pattern pattern, DifficultyLevel level, bool pass) {
  EvalRecord rec;
  rec.pattern = pattern;
  rec.level = level;
  Constraint c = make_constraint(MustInclude{"k"});
  CheckResult r;
  r.satisfied = pass;
  if (!pass) r.diagnostic = "unmet";
  rec.report.results.emplace_back(c, r);
  rec.report.total = 1;
  rec.report.satisfied_count = pass ? 1 : 0;
  rec.report.all_satisfied = pass;
  return rec;
}

double cell_percent(const ReportCell& cell) {
  return round_percent(100.0 * static_cast<double>(cell.passed) /
                       static_cast<double>(cell.total));
}

Check criterion_table_arithmetic() {
  Check check;
  const int passes[4][3] = {
      {100, 94, 0}, {61, 50, 11}, {0, 0, 82}, {0, 0, 36}};
  const Pattern patterns[3] = {Pattern::Example, Pattern::Listing,
                               Pattern::Incorporation};
  std::vector<EvalRecord> records;
  for (int level = 0; level < 4; ++level)
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < 100; ++i)
        records.push_back(flat_record(patterns[p],
                                      static_cast<DifficultyLevel>(level + 1),
                                      i < passes[level][p]));
  check.require(records.size() == 1200, "fixture size");
  const auto report = aggregate(records);

  const double level_want[4] = {64.67, 40.67, 27.33, 12.00};
  for (int level = 0; level < 4; ++level)
    check.require(
        std::abs(cell_percent(report.by_level.at(
                     static_cast<DifficultyLevel>(level + 1))) -
                 level_want[level]) <= 0.01,
        "level accuracy " + std::to_string(level + 1));
  const double pattern_want[3] = {40.25, 36.00, 32.25};
  for (int p = 0; p < 3; ++p)
    check.require(std::abs(cell_percent(report.by_pattern.at(patterns[p])) -
                           pattern_want[p]) <= 0.01,
                  "pattern accuracy");
  check.require(std::abs(cell_percent(report.overall) - 36.17) <= 0.01,
                "overall accuracy");
  return check;
}

Check criterion_aggregation_identity() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> per_level(1, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = per_level(rng);
    std::vector<EvalRecord> records;
    double mean_of_levels = 0.0;
    for (int level = 1; level <= 4; ++level) {
      std::uniform_int_distribution<int> pass_count(0, n);
      const int passed = pass_count(rng);
      for (int i = 0; i < n; ++i)
        records.push_back(flat_record(Pattern::Listing,
                                      static_cast<DifficultyLevel>(level),
                                      i < passed));
      mean_of_levels +=
          round_percent(100.0 * passed / static_cast<double>(n)) / 4.0;
    }
    const auto report = aggregate(records);
    // With equal level cells the overall accuracy is the mean of the level
    // accuracies, up to rounding of each displayed value.
    check.require(
        std::abs(cell_percent(report.overall) - mean_of_levels) <= 0.011,
        "identity violated at trial " + std::to_string(trial));
  }
  check.require(elapsed_seconds(start) < 10.0, "exceeded 10s");
  return check;
}

// ---------------------------------------------------------------- criterion 4

Check criterion_verifier_oracles() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(424242);

  for (int i = 0; i < 10000; ++i) {
    const auto w = testgen::random_word_text(rng);
    check.require(count_words(w.text) == w.expected, "word count mismatch");
    const auto s = testgen::random_sentence_text(rng);
    check.require(count_sentences(s.text) == s.expected,
                  "sentence count mismatch");
    const auto p = testgen::random_paragraph_text(rng);
    check.require(count_paragraphs(p.text) == p.expected,
                  "paragraph count mismatch");
  }

  const std::vector<std::string> phrases = {"a", "ab", "ba", "aba", "a b"};
  for (int i = 0; i < 10000; ++i) {
    const std::string text = testgen::random_ab_text(rng);
    const std::string& phrase = phrases[i % phrases.size()];
    const bool boundary = (i / phrases.size()) % 2 == 0;
    check.require(count_occurrences(text, phrase, boundary, true) ==
                      testgen::naive_occurrences(text, phrase, boundary),
                  "occurrence count mismatch");
  }

  for (int i = 0; i < 10000; ++i) {
    const auto j = testgen::random_json_text(rng);
    check.require(json_max_object_depth(j.text) == j.expected,
                  "json depth mismatch");
    const auto t = testgen::random_table_text(rng);
    const auto structure = markdown_structure(t.text);
    check.require(structure.tables.size() == 1 &&
                      structure.tables[0].first == t.rows &&
                      structure.tables[0].second == t.cols,
                  "table dims mismatch");
  }

  check.require(elapsed_seconds(start) < 60.0, "exceeded 60s");
  return check;
}

// ---------------------------------------------------------------- criterion 5

Check criterion_golden_answers() {
  Check check;
  const auto pairs = testgold::golden_pairs();
  check.require(pairs.size() >= 10, "fewer than 10 fixtures");
  for (const auto& pair : pairs) {
    const auto report = verify_all(pair.constraints, pair.answer);
    check.require(report.all_satisfied, "fixture failed: " + pair.name);
  }
  return check;
}

// ---------------------------------------------------------------- criterion 6

Check criterion_reward_bounds() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Constraint> pool;
  for (Category cat : {Category::Content, Category::Format, Category::Language,
                       Category::Length})
    for (const auto& c : mock_constraint_menu(cat)) pool.push_back(c);

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    InstructionInstance inst;
    inst.id = "r" + std::to_string(trial);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) inst.constraints.push_back(pool[pick(rng)]);

    std::string text = testgen::random_word_text(rng).text;
    if (trial % 3 == 0) text += " Energy Data Overview.";
    if (trial % 5 == 0) text = "## Heading\n> quote\n" + text;

    const int r = reward(inst, text);
    check.require(r >= 0 && r <= 8, "reward out of bounds");
    int individually = 0;
    for (const auto& c : inst.constraints)
      if (verify(c, text).satisfied) ++individually;
    check.require(r == individually, "reward is not the satisfied count");
  }
  check.require(elapsed_seconds(start) < 10.0, "exceeded 10s");
  return check;
}

// ---------------------------------------------------------------- criterion 7

bool contains_han(const std::string& text) {
  for (char32_t cp : utf8::decode_all(text))
    if (utf8::is_han(cp)) return true;
  return false;
}

bool contains_latin_letter(const std::string& text) {
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  return false;
}

// A candidate text is a plausible witness for a constraint pair only when it
// is writable in one language: an English case rule speaks about an English
// answer, a script rule about a Chinese one.
bool language_compatible(const Constraint& c, const std::string& text) {
  if (std::holds_alternative<Case>(c.spec))
    return !contains_han(text) && contains_latin_letter(text);
  if (std::holds_alternative<Script>(c.spec))
    return !contains_latin_letter(text);
  return true;
}

std::vector<std::string> witness_corpus(const Constraint& a,
                                        const Constraint& b) {
  std::vector<std::string> tokens = {"书", "書", "人", "Word", "B"};
  auto add_phrase = [&](const std::string& phrase) {
    if (phrase.empty()) return;
    tokens.push_back(phrase);
    std::string lower = phrase, upper = phrase, capitalized = phrase;
    for (char& ch : lower)
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (char& ch : upper)
      ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    bool start = true;
    for (char& ch : capitalized) {
      ch = start
               ? static_cast<char>(std::toupper(static_cast<unsigned char>(ch)))
               : static_cast<char>(
                     std::tolower(static_cast<unsigned char>(ch)));
      start = std::isspace(static_cast<unsigned char>(ch));
    }
    tokens.push_back(lower);
    tokens.push_back(upper);
    tokens.push_back(capitalized);
  };
  for (const Constraint* c : {&a, &b}) {
    std::visit(
        [&](const auto& spec) {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, MustInclude> ||
                        std::is_same_v<T, Repeated> ||
                        std::is_same_v<T, Avoid>)
            add_phrase(spec.phrase);
          else if constexpr (std::is_same_v<T, StartIdentifier> ||
                             std::is_same_v<T, EndIdentifier> ||
                             std::is_same_v<T, DelimitingIdentifier>)
            add_phrase(spec.token);
          else if constexpr (std::is_same_v<T, EndingPunctuation> ||
                             std::is_same_v<T, ExcludePunctuation>)
            tokens.push_back(spec.ch);
        },
        c->spec);
  }

  std::vector<std::string> corpus;
  const std::vector<std::string> suffixes = {"", ".", "!"};
  for (const auto& t1 : tokens)
    for (const auto& suffix : suffixes) {
      corpus.push_back(t1 + suffix);
      for (const auto& t2 : tokens) corpus.push_back(t1 + " " + t2 + suffix);
    }

  // Count-bearing structures for length and structural bound pairs.
  for (int n = 0; n <= 45; ++n) {
    std::string words, sentences, paragraphs;
    for (int i = 0; i < n; ++i) {
      words += "word ";
      sentences += "One word. ";
      paragraphs += "line\n\n";
    }
    corpus.push_back(words);
    corpus.push_back(sentences);
    corpus.push_back(paragraphs);
  }
  for (int rows = 1; rows <= 8; ++rows)
    for (int cols = 1; cols <= 6; ++cols) {
      std::string table;
      auto row = [&](const std::string& cell) {
        std::string r = "|";
        for (int c = 0; c < cols; ++c) r += " " + cell + " |";
        return r + "\n";
      };
      table += row("h");
      table += row("---");
      for (int r = 0; r < rows; ++r) table += row("d");
      corpus.push_back(table);
    }
  for (int depth = 0; depth <= 6; ++depth) {
    std::string open, close = "1";
    for (int d = 0; d < depth; ++d) {
      open += "{\"k\":";
      close += "}";
    }
    corpus.push_back(open + close);
  }
  for (int attrs = 0; attrs <= 8; ++attrs) {
    std::string xml = "<e";
    for (int i = 0; i < attrs; ++i)
      xml += " a" + std::to_string(i) + "=\"v\"";
    corpus.push_back(xml + "/>");
    // The same attribute count spread over two elements.
    if (attrs >= 2) {
      std::string spread = "<e";
      for (int i = 0; i < attrs / 2; ++i)
        spread += " a" + std::to_string(i) + "=\"v\"";
      spread += "/><f";
      for (int i = attrs / 2; i < attrs; ++i)
        spread += " a" + std::to_string(i) + "=\"v\"";
      corpus.push_back(spread + "/>");
    }
  }
  return corpus;
}

std::optional<std::string> find_witness(const Constraint& a,
                                        const Constraint& b) {
  for (const auto& text : witness_corpus(a, b)) {
    if (!language_compatible(a, text) || !language_compatible(b, text))
      continue;
    if (verify(a, text).satisfied && verify(b, text).satisfied) return text;
  }
  return std::nullopt;
}

Check criterion_conflict_soundness() {
  Check check;
  std::vector<Constraint> pool;
  for (Category cat : {Category::Content, Category::Format, Category::Language,
                       Category::Length})
    for (const auto& c : mock_constraint_menu(cat)) pool.push_back(c);
  pool.push_back(make_constraint(Case{CaseMode::AllLowercase}));
  pool.push_back(make_constraint(Case{CaseMode::AllUppercase}));
  pool.push_back(make_constraint(Avoid{"Energy"}));
  pool.push_back(make_constraint(MustInclude{"plain token"}));
  pool.push_back(make_constraint(EndingPunctuation{"."}));
  pool.push_back(make_constraint(ExcludePunctuation{"."}));
  pool.push_back(
      make_constraint(LengthCount{LengthUnit::Words, Bound::AtLeast, 30}));
  pool.push_back(
      make_constraint(LengthCount{LengthUnit::Words, Bound::AtMost, 10}));
  pool.push_back(make_constraint(TableRows{Bound::AtLeast, 6}));
  pool.push_back(make_constraint(JsonNesting{Bound::AtMost, 1}));

  int flagged = 0;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j)
      if (const auto reason = pair_conflict(pool[i], pool[j])) {
        ++flagged;
        if (const auto witness = find_witness(pool[i], pool[j]))
          check.require(false, "witness \"" + *witness + "\" defeats rule \"" +
                                   *reason + "\"");
      }
  check.require(flagged > 0, "rule matrix flagged nothing");

  // Lowercase versus capitalized is flagged and discarded by the gate.
  const std::vector<Constraint> clash = {
      make_constraint(Case{CaseMode::AllLowercase}),
      make_constraint(Case{CaseMode::CapitalizedEachWord}),
  };
  check.require(pair_conflict(clash[0], clash[1]).has_value(),
                "lowercase vs capitalized not flagged");
  check.require(!gate(clash, "q", GatePolicy::RulesOnly).keep,
                "gate kept a flagged pair");

  // Uppercase versus capitalized has the single-word witness "B".
  const Constraint upper = make_constraint(Case{CaseMode::AllUppercase});
  const Constraint capitalized =
      make_constraint(Case{CaseMode::CapitalizedEachWord});
  check.require(!pair_conflict(upper, capitalized).has_value(),
                "uppercase vs capitalized wrongly flagged");
  check.require(verify(upper, "B").satisfied &&
                    verify(capitalized, "B").satisfied,
                "witness B rejected");
  return check;
}

// ---------------------------------------------------------------- criterion 8

Check criterion_pipeline_desk_scale() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> questions = {
      "Explain photosynthesis.",
      "What is a hash table?",
      "Describe the water cycle.",
      "How do vaccines work?",
      "What causes inflation?",
      "Explain how a compiler works.",
      "What is the role of mitochondria?",
      "Describe the rules of chess.",
      "How does public key cryptography work?",
      "What is plate tectonics?",
  };
  PipelineConfig config;
  config.seed = 20260823;
  const auto templates = load_templates(IFKIT_TEMPLATE_DIR);

  MockChatClient client(config.seed);
  const auto result = run_pipeline(questions, config, client, templates);
  check.require(result.questions_skipped == 0, "questions were skipped");
  check.require(result.instances.size() == 40, "expected 40 instances");

  std::map<DifficultyLevel, int> per_level;
  for (const auto& inst : result.instances) {
    ++per_level[inst.level];
    try {
      validate_instance(inst);
    } catch (const Error& e) {
      check.require(false, std::string("validate failed: ") + e.what());
    }
    check.require(compute_difficulty(inst.constraints) == inst.level,
                  "difficulty inconsistent");
    check.require(gate(inst.constraints, inst.rendered_instruction,
                       GatePolicy::RulesOnly)
                      .keep,
                  "gate rejects a stored instance");
  }
  for (int level = 1; level <= 4; ++level)
    check.require(per_level[static_cast<DifficultyLevel>(level)] == 10,
                  "level quota violated");

  MockChatClient replay(config.seed);
  const auto again = run_pipeline(questions, config, replay, templates);
  check.require(encode_dataset(again.instances) ==
                    encode_dataset(result.instances),
                "two seeded runs differ");
  check.require(elapsed_seconds(start) < 60.0, "exceeded 60s");
  return check;
}

// ---------------------------------------------------------------- criterion 9

Check criterion_prompt_fidelity() {
  Check check;
  const std::string question = "Explain photosynthesis.";
  std::vector<Constraint> list = {make_constraint(MustInclude{"Energy"})};
  list[0].nl_text = "The answer must include the keyword 'Energy'";
  const std::string tuples = constraint_tuple_list(list);

  auto substitute = [](std::string body,
                       const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
      const std::string site = "{" + key + "}";
      const size_t at = body.find(site);
      if (at != std::string::npos) body.replace(at, site.size(), value);
    }
    return body;
  };

  const auto expand = load_template(IFKIT_TEMPLATE_DIR, TemplateName::Expand);
  const CountWording cw = count_wording(1);
  check.require(
      render_expand_prompt(expand, Category::Length, 1, list, question) ==
          substitute(expand.body,
                     {{"new_constrint_list",
                       new_constraint_list_block(Category::Length)},
                      {"c1", cw.c1},
                      {"c2", cw.c2},
                      {"c3", cw.c3},
                      {"original_constraint_list", tuples},
                      {"original_question", question}}),
      "expand prompt deviates from the template");

  const auto conflict =
      load_template(IFKIT_TEMPLATE_DIR, TemplateName::Conflict);
  check.require(
      render_conflict_prompt(conflict, list, question) ==
          substitute(conflict.body, {{"constraint_list", tuples},
                                     {"quetsion", question}}),
      "conflict prompt deviates from the template");

  for (TemplateName name :
       {TemplateName::RewriteListing, TemplateName::RewriteIncorporation}) {
    const auto tmpl = load_template(IFKIT_TEMPLATE_DIR, name);
    check.require(
        render_rewrite_prompt(tmpl, list, question) ==
            substitute(tmpl.body, {{"original_question", question},
                                   {"constraint_list", "[" + tuples + "]"}}),
        "rewrite prompt deviates from the template");
  }
  return check;
}

// --------------------------------------------------------------- criterion 10

Check criterion_service_equivalence() {
  Check check;
  // A small pipeline output becomes the service dataset.
  MockChatClient client(11);
  PipelineConfig config;
  config.seed = 11;
  const auto templates = load_templates(IFKIT_TEMPLATE_DIR);
  const auto generated = run_pipeline(
      {"Explain photosynthesis.", "What is a hash table?"}, config, client,
      templates);
  check.require(generated.instances.size() == 8, "service dataset size");
  const auto dataset = generated.instances;

  RewardService service(dataset);
  const int port = 18561;
  std::thread server([&service, port] { service.listen("127.0.0.1", port); });
  httplib::Client http("127.0.0.1", port);
  for (int i = 0; i < 200; ++i) {
    if (http.Get("/healthz")) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }

  std::mt19937_64 rng(5150);
  std::vector<double> latencies_ms;
  latencies_ms.reserve(1000);
  bool all_match = true;
  for (int i = 0; i < 1000 && all_match; ++i) {
    const auto& inst = dataset[i % dataset.size()];
    std::string output = testgen::random_word_text(rng).text;
    if (i % 4 == 0) output = "## Energy\n> quote\n" + output;
    const nlohmann::json body = {{"instance_id", inst.id}, {"output", output}};

    const auto t0 = std::chrono::steady_clock::now();
    auto res = http.Post("/v1/reward", body.dump(), "application/json");
    latencies_ms.push_back(
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count());
    if (!res || res->status != 200) {
      all_match = false;
      break;
    }
    const int remote = nlohmann::json::parse(res->body).at("reward").get<int>();
    const int local = verify_all(inst.constraints, output).satisfied_count;
    if (remote != local) all_match = false;
  }
  check.require(all_match, "remote reward disagrees with in-process result");

  std::sort(latencies_ms.begin(), latencies_ms.end());
  const double p99 = latencies_ms[latencies_ms.size() * 99 / 100];
  check.require(p99 < 50.0, "p99 latency " + std::to_string(p99) + "ms");

  service.stop();
  server.join();
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"difficulty level exhaustiveness", criterion_difficulty},
      {"published accuracy table arithmetic", criterion_table_arithmetic},
      {"aggregation identity on random fixtures", criterion_aggregation_identity},
      {"verifier equivalence with independent oracles", criterion_verifier_oracles},
      {"published answers pass their constraints", criterion_golden_answers},
      {"reward bounds and additivity", criterion_reward_bounds},
      {"conflict rule soundness", criterion_conflict_soundness},
      {"pipeline desk-scale determinism", criterion_pipeline_desk_scale},
      {"prompt template fidelity", criterion_prompt_fidelity},
      {"reward service equivalence and latency", criterion_service_equivalence},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      check = criteria[i].run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    std::cout << "CRITERION " << (i + 1) << " (" << criteria[i].name
              << "): " << (check.ok ? "PASS" : "FAIL") << "\n";
    if (!check.ok) {
      std::cout << "  detail: " << check.detail << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
