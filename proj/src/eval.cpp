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

#include "ifkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "ifkit/error.hpp"

namespace ifkit {

double round_percent(double percent) {
  return std::floor(percent * 100.0 + 0.5 + 1e-9) / 100.0;
}

std::optional<double> ReportCell::percent() const {
  if (total == 0) return std::nullopt;
  return round_percent(100.0 * static_cast<double>(passed) /
                       static_cast<double>(total));
}

EvalRecord score_instance(const InstructionInstance& instance,
                          const std::string& output_text,
                          const std::string& model_tag) {
  EvalRecord rec;
  rec.instance_id = instance.id;
  rec.pattern = instance.pattern;
  rec.level = instance.level;
  rec.model_tag = model_tag;
  rec.report = verify_all(instance.constraints, output_text);
  return rec;
}

int reward(const InstructionInstance& instance,
           const std::string& output_text) {
  return verify_all(instance.constraints, output_text).satisfied_count;
}

DimensionalReport aggregate(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw EmptyRecordSet();
  DimensionalReport report;
  for (const auto& rec : records) {
    const bool pass = rec.pass();
    auto& p = report.by_pattern[rec.pattern];
    ++p.total;
    if (pass) ++p.passed;
    auto& l = report.by_level[rec.level];
    ++l.total;
    if (pass) ++l.passed;
    ++report.overall.total;
    if (pass) ++report.overall.passed;

    // A record contributes to a category cell only when it carries that
    // category; the cell passes when all its constraints of that category do.
    std::set<Category> present;
    std::set<Category> failed;
    for (const auto& [constraint, result] : rec.report.results) {
      present.insert(constraint.category);
      if (!result.satisfied) failed.insert(constraint.category);
    }
    for (Category c : present) {
      auto& cell = report.by_category[c];
      ++cell.total;
      if (!failed.count(c)) ++cell.passed;
    }
  }
  return report;
}

std::string strip_reasoning(const std::string& text, const std::string& open,
                            const std::string& close) {
  std::string out = text;
  for (;;) {
    const size_t begin = out.find(open);
    if (begin == std::string::npos) break;
    const size_t end = out.find(close, begin + open.size());
    if (end == std::string::npos) {
      out.erase(begin);
      break;
    }
    out.erase(begin, end + close.size() - begin);
  }
  return out;
}

namespace {

const std::vector<std::string>& column_names() {
  static const std::vector<std::string> names = {
      "Example", "Listing", "Incorporation", "Content", "Format",
      "Language", "Length", "I", "II", "III", "IV", "Overall"};
  return names;
}

std::vector<std::optional<double>> row_values(const DimensionalReport& r) {
  auto cell = [](const auto& map, auto key) -> std::optional<double> {
    auto it = map.find(key);
    if (it == map.end()) return std::nullopt;
    return it->second.percent();
  };
  return {cell(r.by_pattern, Pattern::Example),
          cell(r.by_pattern, Pattern::Listing),
          cell(r.by_pattern, Pattern::Incorporation),
          cell(r.by_category, Category::Content),
          cell(r.by_category, Category::Format),
          cell(r.by_category, Category::Language),
          cell(r.by_category, Category::Length),
          cell(r.by_level, DifficultyLevel::I),
          cell(r.by_level, DifficultyLevel::II),
          cell(r.by_level, DifficultyLevel::III),
          cell(r.by_level, DifficultyLevel::IV),
          r.overall.percent()};
}

std::string format_cell(const std::optional<double>& value) {
  if (!value) return "—";
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << *value;
  return out.str();
}

}  // namespace

std::string render_report(
    const std::vector<std::pair<std::string, DimensionalReport>>& rows,
    ReportFormat format) {
  const auto& names = column_names();
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Csv: {
      out << "Model";
      for (const auto& n : names) out << "," << n;
      out << "\n";
      for (const auto& [tag, report] : rows) {
        out << tag;
        for (const auto& v : row_values(report)) out << "," << format_cell(v);
        out << "\n";
      }
      break;
    }
    case ReportFormat::Markdown: {
      out << "| Model |";
      for (const auto& n : names) out << " " << n << " |";
      out << "\n|";
      for (size_t i = 0; i <= names.size(); ++i) out << " --- |";
      out << "\n";
      for (const auto& [tag, report] : rows) {
        out << "| " << tag << " |";
        for (const auto& v : row_values(report))
          out << " " << format_cell(v) << " |";
        out << "\n";
      }
      break;
    }
    case ReportFormat::Plain: {
      std::vector<size_t> widths;
      widths.push_back(5);  // "Model"
      for (const auto& [tag, report] : rows)
        widths[0] = std::max(widths[0], tag.size());
      for (size_t i = 0; i < names.size(); ++i) {
        size_t w = names[i].size();
        for (const auto& [tag, report] : rows)
          w = std::max(w, format_cell(row_values(report)[i]).size());
        widths.push_back(w);
      }
      out << std::left << std::setw(static_cast<int>(widths[0])) << "Model";
      for (size_t i = 0; i < names.size(); ++i)
        out << "  " << std::setw(static_cast<int>(widths[i + 1])) << names[i];
      out << "\n";
      for (const auto& [tag, report] : rows) {
        out << std::left << std::setw(static_cast<int>(widths[0])) << tag;
        const auto values = row_values(report);
        for (size_t i = 0; i < values.size(); ++i)
          out << "  " << std::setw(static_cast<int>(widths[i + 1]))
              << format_cell(values[i]);
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::vector<std::pair<std::string, DimensionalReport>> run_eval(
    const std::vector<InstructionInstance>& instances,
    const std::vector<OutputRecord>& outputs) {
  std::map<std::string, std::vector<const OutputRecord*>> by_id;
  for (const auto& o : outputs) by_id[o.instance_id].push_back(&o);

  std::vector<std::string> missing;
  std::map<std::string, std::vector<EvalRecord>> by_tag;
  for (const auto& inst : instances) {
    auto it = by_id.find(inst.id);
    if (it == by_id.end()) {
      missing.push_back(inst.id);
      continue;
    }
    for (const OutputRecord* o : it->second) {
      by_tag[o->model_tag].push_back(score_instance(
          inst, strip_reasoning(o->output_text), o->model_tag));
    }
  }
  if (!missing.empty()) throw MissingOutputs(missing);

  std::vector<std::pair<std::string, DimensionalReport>> rows;
  for (const auto& [tag, records] : by_tag)
    rows.emplace_back(tag.empty() ? "model" : tag, aggregate(records));
  return rows;
}

}  // namespace ifkit
