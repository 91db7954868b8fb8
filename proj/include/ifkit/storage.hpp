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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifkit/conflict.hpp"
#include "ifkit/constraint.hpp"
#include "ifkit/eval.hpp"

namespace ifkit {

// Constraint specs serialize as tagged objects so files stay machine
// checkable while nl_text keeps the human-readable rendering alongside.
nlohmann::ordered_json encode_constraint(const Constraint& c);
Constraint decode_constraint(const nlohmann::json& j, bool strict);

// Line format: schema_version 1 records with stable field order. Encoding the
// same instance twice yields identical bytes.
nlohmann::ordered_json encode_instance(const InstructionInstance& inst);
InstructionInstance decode_instance(const nlohmann::json& j, bool strict);

std::string encode_dataset(const std::vector<InstructionInstance>& instances);

// One record per line, trailing newline. Throws IoError.
void write_dataset(const std::vector<InstructionInstance>& instances,
                   const std::string& path);

// Strict mode throws DecodeError(line, cause) on malformed records including
// unknown fields, and InvariantError(line, cause) when a record decodes but
// fails validate_instance. Lenient mode ignores unknown fields and skips bad
// lines, recording a note per skip in `warnings` when given.
std::vector<InstructionInstance> read_dataset(
    const std::string& path, bool strict,
    std::vector<std::string>* warnings = nullptr);

void write_outputs(const std::vector<OutputRecord>& outputs,
                   const std::string& path);
std::vector<OutputRecord> read_outputs(const std::string& path);

struct RunConfig {
  std::string endpoint;
  std::string model_name;
  std::string credential_env_name = "IFKIT_API_KEY";
  int max_parallel = 4;
  int retry_max_attempts = 3;
  std::map<DifficultyLevel, int> level_quotas;
  std::map<Pattern, double> pattern_mix = {{Pattern::Listing, 0.5},
                                           {Pattern::Incorporation, 0.5}};
  std::uint64_t seed = 0;
  std::string template_dir;
  bool strict = true;
  GatePolicy gate_policy = GatePolicy::RulesOnly;
};

// Flat key=value file, '#' comments. Every key can be overridden by an
// IFKIT_<UPPERCASED KEY> environment variable, which wins over the file.
// Unknown keys and malformed values throw InvalidConfig(field). The
// credential itself is never stored in the config; require_credential reads
// it from the environment on demand.
RunConfig load_config(const std::string& path);
RunConfig default_config();

// Throws MissingCredential when the named environment variable is unset.
std::string require_credential(const RunConfig& config);

}  // namespace ifkit
