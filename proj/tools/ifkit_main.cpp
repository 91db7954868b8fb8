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

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifkit/chat_client.hpp"
#include "ifkit/conflict.hpp"
#include "ifkit/error.hpp"
#include "ifkit/eval.hpp"
#include "ifkit/mock_client.hpp"
#include "ifkit/pipeline.hpp"
#include "ifkit/service.hpp"
#include "ifkit/storage.hpp"

namespace {

using namespace ifkit;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(file, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void print_counts(const std::vector<InstructionInstance>& instances) {
  std::map<DifficultyLevel, std::map<Pattern, int>> grid;
  std::map<Pattern, int> pattern_totals;
  for (const auto& inst : instances) {
    ++grid[inst.level][inst.pattern];
    ++pattern_totals[inst.pattern];
  }
  const std::vector<Pattern> patterns = {Pattern::Example, Pattern::Listing,
                                         Pattern::Incorporation};
  std::cout << std::left << std::setw(10) << "Level";
  for (Pattern p : patterns) std::cout << std::setw(15) << to_string(p);
  std::cout << std::setw(8) << "Total" << "\n";
  int grand_total = 0;
  for (DifficultyLevel l : {DifficultyLevel::I, DifficultyLevel::II,
                            DifficultyLevel::III, DifficultyLevel::IV}) {
    int row_total = 0;
    std::cout << std::setw(10) << to_string(l);
    for (Pattern p : patterns) {
      const int n = grid[l][p];
      row_total += n;
      std::cout << std::setw(15) << n;
    }
    grand_total += row_total;
    std::cout << std::setw(8) << row_total << "\n";
  }
  std::cout << std::setw(10) << "Total";
  for (Pattern p : patterns) std::cout << std::setw(15) << pattern_totals[p];
  std::cout << std::setw(8) << grand_total << "\n";
}

int cmd_generate(const std::string& questions_path, const std::string& out_path,
                 const std::string& config_path, std::uint64_t seed,
                 bool seed_set, const std::string& gate_name) {
  RunConfig config =
      config_path.empty() ? default_config() : load_config(config_path);
  if (seed_set) config.seed = seed;
  if (!gate_name.empty()) {
    if (gate_name == "rules-only") config.gate_policy = GatePolicy::RulesOnly;
    else if (gate_name == "rules-then-llm")
      config.gate_policy = GatePolicy::RulesThenLlm;
    else throw InvalidConfig("gate");
  }

  const std::vector<std::string> questions = read_lines(questions_path);
  const PromptTemplates templates = load_templates(config.template_dir);

  PipelineConfig pipeline;
  pipeline.seed = config.seed;
  pipeline.gate_policy = config.gate_policy;
  pipeline.pattern_mix = config.pattern_mix;

  std::unique_ptr<ChatClient> client;
  if (config.endpoint.empty()) {
    client = std::make_unique<MockChatClient>(config.seed);
  } else {
    HttpClientConfig http;
    http.endpoint = config.endpoint;
    http.model_name = config.model_name;
    http.max_parallel = config.max_parallel;
    http.retry.max_attempts = config.retry_max_attempts;
    if (const char* key = std::getenv(config.credential_env_name.c_str()))
      http.api_key = key;
    client = std::make_unique<HttpChatClient>(std::move(http));
  }

  const GenerationResult result =
      run_pipeline(questions, pipeline, *client, templates);
  for (const auto& reason : result.skip_reasons)
    std::cerr << "skipped " << reason << "\n";
  write_dataset(result.instances, out_path);
  std::cout << "wrote " << result.instances.size() << " instances to "
            << out_path << "\n\n";
  print_counts(result.instances);
  return result.instances.empty() ? 1 : 0;
}

int cmd_verify(const std::string& dataset_path,
               const std::string& outputs_path) {
  const auto instances = read_dataset(dataset_path, /*strict=*/true);
  const auto outputs = read_outputs(outputs_path);
  std::map<std::string, const InstructionInstance*> by_id;
  for (const auto& inst : instances) by_id[inst.id] = &inst;

  int passed = 0;
  int missing = 0;
  for (const auto& o : outputs) {
    auto it = by_id.find(o.instance_id);
    if (it == by_id.end()) {
      std::cout << o.instance_id << "  UNKNOWN ID\n";
      ++missing;
      continue;
    }
    const auto report = verify_all(it->second->constraints,
                                   strip_reasoning(o.output_text));
    std::cout << o.instance_id << "  "
              << (report.all_satisfied ? "PASS" : "FAIL") << "  "
              << report.satisfied_count << "/" << report.total << "\n";
    if (report.all_satisfied) ++passed;
  }
  std::cout << "\n" << passed << "/" << outputs.size() << " outputs passed";
  if (missing > 0) std::cout << ", " << missing << " unknown id(s)";
  std::cout << "\n";
  return missing > 0 ? 1 : 0;
}

int cmd_evaluate(const std::string& dataset_path,
                 const std::string& outputs_path, const std::string& format) {
  const auto instances = read_dataset(dataset_path, /*strict=*/true);
  const auto outputs = read_outputs(outputs_path);
  const auto rows = run_eval(instances, outputs);
  if (rows.empty()) throw EmptyRecordSet();
  ReportFormat fmt = ReportFormat::Plain;
  if (format == "csv") fmt = ReportFormat::Csv;
  else if (format == "markdown") fmt = ReportFormat::Markdown;
  else if (format != "plain") throw InvalidConfig("format");
  std::cout << render_report(rows, fmt);
  return 0;
}

int cmd_conflicts(const std::string& dataset_path) {
  const auto instances = read_dataset(dataset_path, /*strict=*/true);
  if (instances.empty()) {
    std::cerr << "warning: dataset is empty\n";
    return 0;
  }
  int flagged = 0;
  for (const auto& inst : instances) {
    const ConflictReport report = detect_conflicts(inst.constraints);
    if (!report.has_conflict) continue;
    ++flagged;
    std::cout << inst.id << ":\n";
    for (const auto& c : report.conflicts)
      std::cout << "  [" << c.index_a << ", " << c.index_b << "] " << c.reason
                << "\n";
  }
  std::cout << flagged << "/" << instances.size() << " instances flagged\n";
  return flagged > 0 ? 1 : 0;
}

int cmd_serve(const std::string& dataset_path, const std::string& host,
              int port) {
  auto instances = read_dataset(dataset_path, /*strict=*/true);
  RewardService service(std::move(instances));
  std::cout << "serving " << service.instance_count() << " instances on "
            << host << ":" << port << "\n";
  if (!service.listen(host, port)) {
    std::cerr << "failed to bind " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constraint-following data toolkit"};
  app.require_subcommand(1);

  std::string questions_path, out_path = "dataset.jsonl", config_path;
  std::uint64_t seed = 0;
  std::string gate_name;
  auto* generate = app.add_subcommand(
      "generate", "Expand questions into a constraint dataset");
  generate->add_option("--questions", questions_path,
                       "File with one core question per line")
      ->required();
  generate->add_option("--out", out_path, "Output dataset path");
  generate->add_option("--config", config_path, "Run config file");
  auto* seed_opt = generate->add_option("--seed", seed, "Run seed");
  generate->add_option("--gate", gate_name, "rules-only or rules-then-llm");

  std::string dataset_path, outputs_path, format = "plain";
  auto* verify = app.add_subcommand("verify", "Score outputs one by one");
  verify->add_option("--dataset", dataset_path)->required();
  verify->add_option("--outputs", outputs_path)->required();

  std::string eval_dataset, eval_outputs;
  auto* evaluate =
      app.add_subcommand("evaluate", "Aggregate a dimensional report");
  evaluate->add_option("--dataset", eval_dataset)->required();
  evaluate->add_option("--outputs", eval_outputs)->required();
  evaluate->add_option("--format", format, "plain, csv, or markdown");

  std::string conflicts_dataset;
  auto* conflicts =
      app.add_subcommand("conflicts", "Scan a dataset for conflicting lists");
  conflicts->add_option("--dataset", conflicts_dataset)->required();

  std::string serve_dataset, host = "0.0.0.0";
  int port = 8080;
  auto* serve =
      app.add_subcommand("reward-serve", "Serve rewards over HTTP");
  serve->add_option("--dataset", serve_dataset)->required();
  serve->add_option("--host", host);
  serve->add_option("--port", port);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return cmd_generate(questions_path, out_path, config_path, seed,
                          seed_opt->count() > 0, gate_name);
    if (verify->parsed()) return cmd_verify(dataset_path, outputs_path);
    if (evaluate->parsed())
      return cmd_evaluate(eval_dataset, eval_outputs, format);
    if (conflicts->parsed()) return cmd_conflicts(conflicts_dataset);
    if (serve->parsed()) return cmd_serve(serve_dataset, host, port);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
