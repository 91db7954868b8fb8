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

#include "ifkit/storage.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ifkit/error.hpp"

#ifndef IFKIT_TEMPLATE_DIR
#define IFKIT_TEMPLATE_DIR "templates"
#endif

namespace ifkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* bound_name(Bound b) {
  switch (b) {
    case Bound::AtMost: return "at_most";
    case Bound::AtLeast: return "at_least";
    case Bound::Range: return "range";
  }
  return "?";
}

Bound bound_from_name(const std::string& s) {
  if (s == "at_most") return Bound::AtMost;
  if (s == "at_least") return Bound::AtLeast;
  if (s == "range") return Bound::Range;
  throw json::other_error::create(501, "unknown bound: " + s, nullptr);
}

const char* match_mode_name(MatchMode m) {
  return m == MatchMode::WordBoundary ? "word_boundary" : "substring";
}

MatchMode match_mode_from_name(const std::string& s) {
  if (s == "word_boundary") return MatchMode::WordBoundary;
  if (s == "substring") return MatchMode::Substring;
  throw json::other_error::create(501, "unknown match mode: " + s, nullptr);
}

struct SpecEncoder {
  ordered_json operator()(const MustInclude& s) const {
    return {{"type", "must_include"},
            {"phrase", s.phrase},
            {"match_mode", match_mode_name(s.match_mode)},
            {"case_sensitive", s.case_sensitive}};
  }
  ordered_json operator()(const Repeated& s) const {
    return {{"type", "repeated"},
            {"phrase", s.phrase},
            {"min_count", s.min_count},
            {"match_mode", match_mode_name(s.match_mode)},
            {"case_sensitive", s.case_sensitive}};
  }
  ordered_json operator()(const Avoid& s) const {
    return {{"type", "avoid"},
            {"phrase", s.phrase},
            {"case_sensitive", s.case_sensitive}};
  }
  ordered_json operator()(const StartIdentifier& s) const {
    return {{"type", "start_identifier"}, {"token", s.token}};
  }
  ordered_json operator()(const EndIdentifier& s) const {
    return {{"type", "end_identifier"}, {"token", s.token}};
  }
  ordered_json operator()(const DelimitingIdentifier& s) const {
    return {{"type", "delimiting_identifier"},
            {"token", s.token},
            {"min_occurrences", s.min_occurrences}};
  }
  ordered_json operator()(const EndingPunctuation& s) const {
    return {{"type", "ending_punctuation"}, {"ch", s.ch}};
  }
  ordered_json operator()(const ExcludePunctuation& s) const {
    return {{"type", "exclude_punctuation"}, {"ch", s.ch}};
  }
  ordered_json operator()(const HeadingLevels& s) const {
    return {{"type", "heading_levels"},
            {"mode", s.mode == HeadingMode::ContainsLevel
                         ? "contains_level"
                         : "at_least_distinct"},
            {"n", s.n}};
  }
  ordered_json operator()(const BlockQuotes& s) const {
    return {{"type", "block_quotes"}, {"min_count", s.min_count}};
  }
  ordered_json operator()(const JsonNesting& s) const {
    return {{"type", "json_nesting"},
            {"bound", bound_name(s.bound)},
            {"n", s.n}};
  }
  ordered_json operator()(const XmlAttributes& s) const {
    return {{"type", "xml_attributes"},
            {"scope", s.scope == XmlScope::Total ? "total" : "per_element_max"},
            {"bound", bound_name(s.bound)},
            {"n", s.n}};
  }
  ordered_json operator()(const TableRows& s) const {
    return {{"type", "table_rows"}, {"bound", bound_name(s.bound)}, {"n", s.n}};
  }
  ordered_json operator()(const TableColumns& s) const {
    return {{"type", "table_columns"},
            {"bound", bound_name(s.bound)},
            {"n", s.n}};
  }
  ordered_json operator()(const Script& s) const {
    return {{"type", "script"},
            {"form",
             s.form == HanForm::Simplified ? "simplified" : "traditional"}};
  }
  ordered_json operator()(const Case& s) const {
    const char* mode = "capitalized_each_word";
    if (s.mode == CaseMode::AllUppercase) mode = "all_uppercase";
    if (s.mode == CaseMode::AllLowercase) mode = "all_lowercase";
    return {{"type", "case"}, {"mode", mode}};
  }
  ordered_json operator()(const LengthCount& s) const {
    const char* unit = "words";
    if (s.unit == LengthUnit::Sentences) unit = "sentences";
    if (s.unit == LengthUnit::Paragraphs) unit = "paragraphs";
    ordered_json out = {{"type", "length_count"},
                        {"unit", unit},
                        {"bound", bound_name(s.bound)},
                        {"lo", s.lo}};
    if (s.hi) out["hi"] = *s.hi;
    return out;
  }
};

void check_keys(const json& j, const std::vector<std::string>& allowed,
                bool strict, const std::string& where) {
  if (!strict) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw json::other_error::create(
          501, "unknown field \"" + it.key() + "\" in " + where, nullptr);
  }
}

ConstraintSpec decode_spec(const json& j, bool strict) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "must_include") {
    check_keys(j, {"type", "phrase", "match_mode", "case_sensitive"}, strict,
               "must_include spec");
    MustInclude s;
    s.phrase = j.at("phrase").get<std::string>();
    if (j.contains("match_mode"))
      s.match_mode = match_mode_from_name(j.at("match_mode").get<std::string>());
    if (j.contains("case_sensitive"))
      s.case_sensitive = j.at("case_sensitive").get<bool>();
    return s;
  }
  if (type == "repeated") {
    check_keys(j, {"type", "phrase", "min_count", "match_mode",
                   "case_sensitive"},
               strict, "repeated spec");
    Repeated s;
    s.phrase = j.at("phrase").get<std::string>();
    s.min_count = j.at("min_count").get<int>();
    if (j.contains("match_mode"))
      s.match_mode = match_mode_from_name(j.at("match_mode").get<std::string>());
    if (j.contains("case_sensitive"))
      s.case_sensitive = j.at("case_sensitive").get<bool>();
    return s;
  }
  if (type == "avoid") {
    check_keys(j, {"type", "phrase", "case_sensitive"}, strict, "avoid spec");
    Avoid s;
    s.phrase = j.at("phrase").get<std::string>();
    if (j.contains("case_sensitive"))
      s.case_sensitive = j.at("case_sensitive").get<bool>();
    return s;
  }
  if (type == "start_identifier") {
    check_keys(j, {"type", "token"}, strict, "start_identifier spec");
    return StartIdentifier{j.at("token").get<std::string>()};
  }
  if (type == "end_identifier") {
    check_keys(j, {"type", "token"}, strict, "end_identifier spec");
    return EndIdentifier{j.at("token").get<std::string>()};
  }
  if (type == "delimiting_identifier") {
    check_keys(j, {"type", "token", "min_occurrences"}, strict,
               "delimiting_identifier spec");
    DelimitingIdentifier s;
    s.token = j.at("token").get<std::string>();
    if (j.contains("min_occurrences"))
      s.min_occurrences = j.at("min_occurrences").get<int>();
    return s;
  }
  if (type == "ending_punctuation") {
    check_keys(j, {"type", "ch"}, strict, "ending_punctuation spec");
    return EndingPunctuation{j.at("ch").get<std::string>()};
  }
  if (type == "exclude_punctuation") {
    check_keys(j, {"type", "ch"}, strict, "exclude_punctuation spec");
    return ExcludePunctuation{j.at("ch").get<std::string>()};
  }
  if (type == "heading_levels") {
    check_keys(j, {"type", "mode", "n"}, strict, "heading_levels spec");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "contains_level" && mode != "at_least_distinct")
      throw json::other_error::create(501, "unknown heading mode: " + mode,
                                      nullptr);
    return HeadingLevels{mode == "contains_level"
                             ? HeadingMode::ContainsLevel
                             : HeadingMode::AtLeastDistinct,
                         j.at("n").get<int>()};
  }
  if (type == "block_quotes") {
    check_keys(j, {"type", "min_count"}, strict, "block_quotes spec");
    return BlockQuotes{j.at("min_count").get<int>()};
  }
  if (type == "json_nesting") {
    check_keys(j, {"type", "bound", "n"}, strict, "json_nesting spec");
    return JsonNesting{bound_from_name(j.at("bound").get<std::string>()),
                       j.at("n").get<int>()};
  }
  if (type == "xml_attributes") {
    check_keys(j, {"type", "scope", "bound", "n"}, strict,
               "xml_attributes spec");
    const std::string scope = j.at("scope").get<std::string>();
    if (scope != "total" && scope != "per_element_max")
      throw json::other_error::create(501, "unknown xml scope: " + scope,
                                      nullptr);
    return XmlAttributes{
        scope == "total" ? XmlScope::Total : XmlScope::PerElementMax,
        bound_from_name(j.at("bound").get<std::string>()), j.at("n").get<int>()};
  }
  if (type == "table_rows") {
    check_keys(j, {"type", "bound", "n"}, strict, "table_rows spec");
    return TableRows{bound_from_name(j.at("bound").get<std::string>()),
                     j.at("n").get<int>()};
  }
  if (type == "table_columns") {
    check_keys(j, {"type", "bound", "n"}, strict, "table_columns spec");
    return TableColumns{bound_from_name(j.at("bound").get<std::string>()),
                        j.at("n").get<int>()};
  }
  if (type == "script") {
    check_keys(j, {"type", "form"}, strict, "script spec");
    const std::string form = j.at("form").get<std::string>();
    if (form != "simplified" && form != "traditional")
      throw json::other_error::create(501, "unknown script form: " + form,
                                      nullptr);
    return Script{form == "simplified" ? HanForm::Simplified
                                       : HanForm::Traditional};
  }
  if (type == "case") {
    check_keys(j, {"type", "mode"}, strict, "case spec");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "all_uppercase") return Case{CaseMode::AllUppercase};
    if (mode == "capitalized_each_word")
      return Case{CaseMode::CapitalizedEachWord};
    if (mode == "all_lowercase") return Case{CaseMode::AllLowercase};
    throw json::other_error::create(501, "unknown case mode: " + mode, nullptr);
  }
  if (type == "length_count") {
    check_keys(j, {"type", "unit", "bound", "lo", "hi"}, strict,
               "length_count spec");
    LengthCount s;
    const std::string unit = j.at("unit").get<std::string>();
    if (unit == "words") s.unit = LengthUnit::Words;
    else if (unit == "sentences") s.unit = LengthUnit::Sentences;
    else if (unit == "paragraphs") s.unit = LengthUnit::Paragraphs;
    else
      throw json::other_error::create(501, "unknown length unit: " + unit,
                                      nullptr);
    s.bound = bound_from_name(j.at("bound").get<std::string>());
    s.lo = j.at("lo").get<long long>();
    if (j.contains("hi")) s.hi = j.at("hi").get<long long>();
    return s;
  }
  throw json::other_error::create(501, "unknown spec type: " + type, nullptr);
}

}  // namespace

ordered_json encode_constraint(const Constraint& c) {
  return {{"category", to_string(c.category)},
          {"subcategory", to_string(c.subcategory)},
          {"spec", std::visit(SpecEncoder{}, c.spec)},
          {"nl_text", c.nl_text}};
}

Constraint decode_constraint(const json& j, bool strict) {
  check_keys(j, {"category", "subcategory", "spec", "nl_text"}, strict,
             "constraint");
  Constraint c;
  const auto category = category_from_string(j.at("category").get<std::string>());
  const auto subcategory =
      subcategory_from_string(j.at("subcategory").get<std::string>());
  if (!category)
    throw json::other_error::create(501, "unknown category", nullptr);
  if (!subcategory)
    throw json::other_error::create(501, "unknown subcategory", nullptr);
  c.category = *category;
  c.subcategory = *subcategory;
  c.spec = decode_spec(j.at("spec"), strict);
  if (j.contains("nl_text")) c.nl_text = j.at("nl_text").get<std::string>();
  if (subcategory_of(c.spec) != c.subcategory)
    throw json::other_error::create(
        501, "spec type does not match subcategory", nullptr);
  return c;
}

ordered_json encode_instance(const InstructionInstance& inst) {
  ordered_json j;
  j["schema_version"] = 1;
  j["id"] = inst.id;
  j["core_question"] = inst.core_question;
  j["rendered_instruction"] = inst.rendered_instruction;
  j["pattern"] = to_string(inst.pattern);
  j["level"] = to_string(inst.level);
  auto& constraints = j["constraints"] = ordered_json::array();
  for (const auto& c : inst.constraints)
    constraints.push_back(encode_constraint(c));
  if (!inst.examples.empty()) {
    auto& examples = j["examples"] = ordered_json::array();
    for (const auto& e : inst.examples) {
      ordered_json pair;
      pair["question"] = e.question;
      pair["answer"] = e.answer;
      auto& subs = pair["subcategories"] = ordered_json::array();
      for (Subcategory s : e.subcategories) subs.push_back(to_string(s));
      examples.push_back(std::move(pair));
    }
  }
  return j;
}

InstructionInstance decode_instance(const json& j, bool strict) {
  check_keys(j,
             {"schema_version", "id", "core_question", "rendered_instruction",
              "pattern", "level", "constraints", "examples"},
             strict, "record");
  if (j.at("schema_version").get<int>() != 1)
    throw json::other_error::create(501, "unsupported schema_version", nullptr);
  InstructionInstance inst;
  inst.id = j.at("id").get<std::string>();
  inst.core_question = j.at("core_question").get<std::string>();
  inst.rendered_instruction = j.at("rendered_instruction").get<std::string>();
  const auto pattern = pattern_from_string(j.at("pattern").get<std::string>());
  if (!pattern)
    throw json::other_error::create(501, "unknown pattern", nullptr);
  inst.pattern = *pattern;
  const auto level = level_from_string(j.at("level").get<std::string>());
  if (!level) throw json::other_error::create(501, "unknown level", nullptr);
  inst.level = *level;
  for (const auto& c : j.at("constraints"))
    inst.constraints.push_back(decode_constraint(c, strict));
  if (j.contains("examples")) {
    for (const auto& e : j.at("examples")) {
      check_keys(e, {"question", "answer", "subcategories"}, strict,
                 "example");
      ExamplePair pair;
      pair.question = e.at("question").get<std::string>();
      pair.answer = e.at("answer").get<std::string>();
      for (const auto& s : e.at("subcategories")) {
        const auto sub = subcategory_from_string(s.get<std::string>());
        if (!sub)
          throw json::other_error::create(501, "unknown subcategory", nullptr);
        pair.subcategories.insert(*sub);
      }
      inst.examples.push_back(std::move(pair));
    }
  }
  return inst;
}

std::string encode_dataset(const std::vector<InstructionInstance>& instances) {
  std::string out;
  for (const auto& inst : instances) out += encode_instance(inst).dump() + "\n";
  return out;
}

void write_dataset(const std::vector<InstructionInstance>& instances,
                   const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open for writing: " + path);
  file << encode_dataset(instances);
  if (!file) throw IoError("write failed: " + path);
}

std::vector<InstructionInstance> read_dataset(
    const std::string& path, bool strict, std::vector<std::string>* warnings) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open: " + path);
  std::vector<InstructionInstance> out;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    InstructionInstance inst;
    try {
      inst = decode_instance(json::parse(line), strict);
    } catch (const json::exception& e) {
      if (strict) throw DecodeError(line_no, e.what());
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) +
                            " skipped: " + e.what());
      continue;
    }
    try {
      validate_instance(inst);
    } catch (const Error& e) {
      if (strict) throw InvariantError(line_no, e.what());
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) +
                            " skipped: " + e.what());
      continue;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

void write_outputs(const std::vector<OutputRecord>& outputs,
                   const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open for writing: " + path);
  for (const auto& o : outputs) {
    ordered_json j;
    j["instance_id"] = o.instance_id;
    j["output"] = o.output_text;
    if (!o.model_tag.empty()) j["model_tag"] = o.model_tag;
    file << j.dump() << "\n";
  }
  if (!file) throw IoError("write failed: " + path);
}

std::vector<OutputRecord> read_outputs(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open: " + path);
  std::vector<OutputRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      OutputRecord rec;
      rec.instance_id = j.at("instance_id").get<std::string>();
      rec.output_text = j.at("output").get<std::string>();
      if (j.contains("model_tag"))
        rec.model_tag = j.at("model_tag").get<std::string>();
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw DecodeError(line_no, e.what());
    }
  }
  return out;
}

namespace {

std::string upper_key(const std::string& key) {
  std::string out = "IFKIT_";
  for (char c : key)
    out.push_back(
        static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long long n = std::stoll(value, &used);
    if (used != value.size()) throw InvalidConfig(key);
    return n;
  } catch (const std::exception&) {
    throw InvalidConfig(key);
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw InvalidConfig(key);
    return d;
  } catch (const std::exception&) {
    throw InvalidConfig(key);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw InvalidConfig(key);
}

void apply_setting(RunConfig& config, const std::string& key,
                   const std::string& value) {
  if (key == "endpoint") config.endpoint = value;
  else if (key == "model") config.model_name = value;
  else if (key == "credential_env") config.credential_env_name = value;
  else if (key == "max_parallel") {
    config.max_parallel = static_cast<int>(parse_int(key, value));
    if (config.max_parallel < 1) throw InvalidConfig(key);
  } else if (key == "retry_max_attempts") {
    config.retry_max_attempts = static_cast<int>(parse_int(key, value));
    if (config.retry_max_attempts < 1) throw InvalidConfig(key);
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "template_dir") {
    config.template_dir = value;
  } else if (key == "strict") {
    config.strict = parse_bool(key, value);
  } else if (key == "gate") {
    if (value == "rules-only") config.gate_policy = GatePolicy::RulesOnly;
    else if (value == "rules-then-llm")
      config.gate_policy = GatePolicy::RulesThenLlm;
    else throw InvalidConfig(key);
  } else if (key == "pattern_example") {
    config.pattern_mix[Pattern::Example] = parse_double(key, value);
  } else if (key == "pattern_listing") {
    config.pattern_mix[Pattern::Listing] = parse_double(key, value);
  } else if (key == "pattern_incorporation") {
    config.pattern_mix[Pattern::Incorporation] = parse_double(key, value);
  } else if (key == "quota_level_1") {
    config.level_quotas[DifficultyLevel::I] =
        static_cast<int>(parse_int(key, value));
  } else if (key == "quota_level_2") {
    config.level_quotas[DifficultyLevel::II] =
        static_cast<int>(parse_int(key, value));
  } else if (key == "quota_level_3") {
    config.level_quotas[DifficultyLevel::III] =
        static_cast<int>(parse_int(key, value));
  } else if (key == "quota_level_4") {
    config.level_quotas[DifficultyLevel::IV] =
        static_cast<int>(parse_int(key, value));
  } else {
    throw InvalidConfig(key);
  }
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "endpoint",       "model",          "credential_env",
      "max_parallel",   "retry_max_attempts", "seed",
      "template_dir",   "strict",         "gate",
      "pattern_example", "pattern_listing", "pattern_incorporation",
      "quota_level_1",  "quota_level_2",  "quota_level_3",
      "quota_level_4"};
  return keys;
}

void validate_config(const RunConfig& config) {
  double sum = 0.0;
  for (const auto& [p, f] : config.pattern_mix) {
    if (f < 0.0) throw InvalidConfig("pattern_mix");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidConfig("pattern_mix");
  for (const auto& [level, quota] : config.level_quotas)
    if (quota < 0) throw InvalidConfig("level_quotas");
}

}  // namespace

RunConfig default_config() {
  RunConfig config;
  config.template_dir = IFKIT_TEMPLATE_DIR;
  return config;
}

RunConfig load_config(const std::string& path) {
  RunConfig config = default_config();
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("line " + std::to_string(line_no));
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    apply_setting(config, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  // Environment wins over the file.
  for (const auto& key : known_keys()) {
    if (const char* env = std::getenv(upper_key(key).c_str()))
      apply_setting(config, key, env);
  }
  validate_config(config);
  return config;
}

std::string require_credential(const RunConfig& config) {
  const char* value = std::getenv(config.credential_env_name.c_str());
  if (value == nullptr || *value == '\0')
    throw MissingCredential(config.credential_env_name);
  return value;
}

}  // namespace ifkit
