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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ifkit/eval.hpp"

using namespace ifkit;

namespace {

InstructionInstance sample_instance() {
  InstructionInstance inst;
  inst.id = "s1";
  inst.core_question = "q";
  inst.rendered_instruction = "q rendered";
  inst.constraints = {
      make_constraint(MustInclude{"Energy"}),
      make_constraint(Case{CaseMode::CapitalizedEachWord}),
      make_constraint(LengthCount{LengthUnit::Words, Bound::AtMost, 10}),
  };
  inst.level = DifficultyLevel::III;
  inst.pattern = Pattern::Incorporation;
  return inst;
}

// A synthetic scored record: one constraint per given category with the
// given satisfaction, whole-record pass iff all are satisfied.
EvalRecord synthetic_record(Pattern pattern, DifficultyLevel level,
                            const std::vector<std::pair<Category, bool>>& parts,
                            const std::string& tag = "m") {
  EvalRecord rec;
  rec.instance_id = "x";
  rec.pattern = pattern;
  rec.level = level;
  rec.model_tag = tag;
  for (const auto& [category, satisfied] : parts) {
    Constraint c;
    switch (category) {
      case Category::Content: c = make_constraint(MustInclude{"k"}); break;
      case Category::Format: c = make_constraint(BlockQuotes{1}); break;
      case Category::Language:
        c = make_constraint(Case{CaseMode::AllLowercase});
        break;
      case Category::Length:
        c = make_constraint(LengthCount{LengthUnit::Words, Bound::AtMost, 9});
        break;
    }
    CheckResult r;
    r.satisfied = satisfied;
    if (!satisfied) r.diagnostic = "unmet";
    rec.report.results.emplace_back(c, r);
    rec.report.total += 1;
    if (satisfied) rec.report.satisfied_count += 1;
  }
  rec.report.all_satisfied =
      rec.report.satisfied_count == rec.report.total && rec.report.total > 0;
  return rec;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("round_percent rounds half up to two decimals") {
  CHECK(round_percent(100.0 * 194 / 300) == doctest::Approx(64.67).epsilon(1e-12));
  CHECK(round_percent(100.0 * 122 / 300) == doctest::Approx(40.67).epsilon(1e-12));
  CHECK(round_percent(100.0 * 82 / 300) == doctest::Approx(27.33).epsilon(1e-12));
  CHECK(round_percent(12.0) == 12.0);
  CHECK(round_percent(0.005) == 0.01);
  CHECK(round_percent(0.004) == 0.0);
  CHECK(round_percent(0.0) == 0.0);
  CHECK(round_percent(100.0) == 100.0);
}

TEST_CASE("reward and score_instance") {
  const auto inst = sample_instance();
  CHECK(reward(inst, "Energy Costs Money.") == 3);
  CHECK(reward(inst, "energy costs money every single day of the whole year, yes") ==
        0);
  CHECK(reward(inst, "Power Is Cheap.") == 2);

  const EvalRecord rec = score_instance(inst, "Energy Costs Money.", "gpt");
  CHECK(rec.instance_id == "s1");
  CHECK(rec.pattern == Pattern::Incorporation);
  CHECK(rec.level == DifficultyLevel::III);
  CHECK(rec.model_tag == "gpt");
  CHECK(rec.pass());
  CHECK(rec.report.satisfied_count == 3);
}

TEST_CASE("aggregate cell semantics") {
  std::vector<EvalRecord> records;
  // Passes everything.
  records.push_back(synthetic_record(
      Pattern::Listing, DifficultyLevel::I,
      {{Category::Content, true}, {Category::Length, true}}));
  // Content satisfied, Length missed: record fails, Content cell passes.
  records.push_back(synthetic_record(
      Pattern::Listing, DifficultyLevel::II,
      {{Category::Content, true}, {Category::Length, false}}));
  // Two Content constraints, one missed: Content cell fails.
  records.push_back(synthetic_record(
      Pattern::Incorporation, DifficultyLevel::I,
      {{Category::Content, true}, {Category::Content, false}}));

  const auto report = aggregate(records);
  CHECK(report.overall.total == 3);
  CHECK(report.overall.passed == 1);
  CHECK(report.by_pattern.at(Pattern::Listing).total == 2);
  CHECK(report.by_pattern.at(Pattern::Listing).passed == 1);
  CHECK(report.by_pattern.at(Pattern::Incorporation).passed == 0);
  CHECK(report.by_pattern.count(Pattern::Example) == 0);
  CHECK(report.by_level.at(DifficultyLevel::I).total == 2);
  CHECK(report.by_level.at(DifficultyLevel::I).passed == 1);
  CHECK(report.by_level.at(DifficultyLevel::II).passed == 0);

  // Content: all three records hold Content constraints, two keep them all.
  CHECK(report.by_category.at(Category::Content).total == 3);
  CHECK(report.by_category.at(Category::Content).passed == 2);
  // Length: only the first two records contribute.
  CHECK(report.by_category.at(Category::Length).total == 2);
  CHECK(report.by_category.at(Category::Length).passed == 1);
  CHECK(report.by_category.count(Category::Format) == 0);

  CHECK_THROWS_AS(aggregate({}), EmptyRecordSet);
}

TEST_CASE("published accuracy table arithmetic") {
  // 100 records per (level, pattern) cell with fixed pass counts.
  const int passes[4][3] = {
      {100, 94, 0},  // level I: Example, Listing, Incorporation
      {61, 50, 11},  // level II
      {0, 0, 82},    // level III
      {0, 0, 36},    // level IV
  };
  const Pattern patterns[3] = {Pattern::Example, Pattern::Listing,
                               Pattern::Incorporation};
  std::vector<EvalRecord> records;
  for (int level = 0; level < 4; ++level)
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < 100; ++i)
        records.push_back(synthetic_record(
            patterns[p], static_cast<DifficultyLevel>(level + 1),
            {{Category::Content, i < passes[level][p]}}));
  REQUIRE(records.size() == 1200);

  const auto report = aggregate(records);
  auto pct = [](const ReportCell& cell) {
    return round_percent(100.0 * static_cast<double>(cell.passed) /
                         static_cast<double>(cell.total));
  };
  CHECK(pct(report.by_level.at(DifficultyLevel::I)) == doctest::Approx(64.67).epsilon(1e-9));
  CHECK(pct(report.by_level.at(DifficultyLevel::II)) == doctest::Approx(40.67).epsilon(1e-9));
  CHECK(pct(report.by_level.at(DifficultyLevel::III)) == doctest::Approx(27.33).epsilon(1e-9));
  CHECK(pct(report.by_level.at(DifficultyLevel::IV)) == doctest::Approx(12.00).epsilon(1e-9));
  CHECK(pct(report.by_pattern.at(Pattern::Example)) == doctest::Approx(40.25).epsilon(1e-9));
  CHECK(pct(report.by_pattern.at(Pattern::Listing)) == doctest::Approx(36.00).epsilon(1e-9));
  CHECK(pct(report.by_pattern.at(Pattern::Incorporation)) == doctest::Approx(32.25).epsilon(1e-9));
  CHECK(pct(report.overall) == doctest::Approx(36.17).epsilon(1e-9));
}

TEST_CASE("render_report layouts") {
  std::vector<EvalRecord> records;
  records.push_back(synthetic_record(Pattern::Listing, DifficultyLevel::I,
                                     {{Category::Content, true}}));
  records.push_back(synthetic_record(Pattern::Listing, DifficultyLevel::I,
                                     {{Category::Content, false}}));
  const auto report = aggregate(records);
  const std::vector<std::pair<std::string, DimensionalReport>> rows = {
      {"model-a", report}, {"model-b", report}};

  const std::string csv = render_report(rows, ReportFormat::Csv);
  std::stringstream ss(csv);
  std::string header, row_a, row_b;
  std::getline(ss, header);
  std::getline(ss, row_a);
  std::getline(ss, row_b);
  CHECK(header ==
        "Model,Example,Listing,Incorporation,Content,Format,Language,Length,"
        "I,II,III,IV,Overall");
  const auto fields = split_csv(row_a);
  REQUIRE(fields.size() == 13);
  CHECK(fields[0] == "model-a");
  CHECK(fields[2] == "50.00");   // Listing
  CHECK(fields[4] == "50.00");   // Content
  CHECK(fields[8] == "50.00");   // level I
  CHECK(fields[12] == "50.00");  // Overall
  // No records contribute to the Example cell.
  CHECK(fields[1] == "\xe2\x80\x94");
  CHECK(split_csv(row_b)[0] == "model-b");

  const std::string md = render_report(rows, ReportFormat::Markdown);
  CHECK(md.find("| Model | Example | Listing |") == 0);
  CHECK(md.find("| --- |") != std::string::npos);
  CHECK(md.find("| model-a |") != std::string::npos);

  const std::string plain = render_report(rows, ReportFormat::Plain);
  CHECK(plain.find("Model") == 0);
  CHECK(plain.find("Overall") != std::string::npos);
  CHECK(plain.find("model-b") != std::string::npos);
}

TEST_CASE("strip_reasoning removes delimited blocks") {
  CHECK(strip_reasoning("<think>steps</think>Answer.") == "Answer.");
  CHECK(strip_reasoning("a<think>x</think>b<think>y</think>c") == "abc");
  CHECK(strip_reasoning("no blocks") == "no blocks");
  // An unterminated block is dropped to the end.
  CHECK(strip_reasoning("keep<think>rest") == "keep");
  CHECK(strip_reasoning("[r]steps[/r]Answer.", "[r]", "[/r]") == "Answer.");
}

TEST_CASE("run_eval joins outputs by id and groups by model tag") {
  auto inst = sample_instance();
  std::vector<OutputRecord> outputs = {
      {"s1", "Energy Costs Money.", "good-model"},
      {"s1", "no match at all for anything here beyond the ten word cap",
       "bad-model"},
  };
  const auto rows = run_eval({inst}, outputs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == "bad-model");
  CHECK(rows[1].first == "good-model");
  CHECK(rows[1].second.overall.passed == 1);
  CHECK(rows[0].second.overall.passed == 0);

  CHECK_THROWS_AS(run_eval({inst}, {{"other-id", "text", "m"}}),
                  MissingOutputs);
}
