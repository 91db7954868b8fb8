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

#include "ifkit/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "ifkit/error.hpp"
#include "ifkit/storage.hpp"
#include "ifkit/verifier.hpp"

namespace ifkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void write_error(httplib::Response& res, int status,
                 const std::string& message) {
  ordered_json body;
  body["error"] = message;
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Resolves the request to a constraint list; sets an error response and
// returns false on any contract violation.
bool resolve_constraints(const json& body,
                         const std::map<std::string, std::size_t>& index,
                         const std::vector<InstructionInstance>& dataset,
                         std::vector<Constraint>& out,
                         httplib::Response& res) {
  const bool has_id = body.contains("instance_id");
  const bool has_inline = body.contains("constraints");
  if (has_id == has_inline) {
    write_error(res, 400,
                "exactly one of instance_id and constraints is required");
    return false;
  }
  if (has_id) {
    if (!body.at("instance_id").is_string()) {
      write_error(res, 400, "instance_id must be a string");
      return false;
    }
    const std::string id = body.at("instance_id").get<std::string>();
    auto it = index.find(id);
    if (it == index.end()) {
      write_error(res, 404, "unknown instance id: " + id);
      return false;
    }
    out = dataset[it->second].constraints;
    return true;
  }
  if (!body.at("constraints").is_array()) {
    write_error(res, 422, "constraints must be an array");
    return false;
  }
  try {
    for (const auto& c : body.at("constraints")) {
      Constraint constraint = decode_constraint(c, /*strict=*/false);
      validate_constraint(constraint);
      out.push_back(std::move(constraint));
    }
    if (out.empty()) throw EmptyConstraintList();
  } catch (const std::exception& e) {
    write_error(res, 422, std::string("invalid constraints: ") + e.what());
    return false;
  }
  return true;
}

void handle_scoring(const std::map<std::string, std::size_t>& index,
                    const std::vector<InstructionInstance>& dataset,
                    const httplib::Request& req, httplib::Response& res,
                    bool per_constraint_detail) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::exception& e) {
    write_error(res, 400, std::string("malformed json: ") + e.what());
    return;
  }
  if (!body.is_object() || !body.contains("output") ||
      !body.at("output").is_string()) {
    write_error(res, 400, "body must be an object with a string \"output\"");
    return;
  }
  std::vector<Constraint> constraints;
  if (!resolve_constraints(body, index, dataset, constraints, res)) return;

  const VerificationReport report =
      verify_all(constraints, body.at("output").get<std::string>());
  ordered_json reply;
  reply["satisfied_count"] = report.satisfied_count;
  reply["reward"] = report.satisfied_count;
  reply["total"] = report.total;
  reply["all_satisfied"] = report.all_satisfied;
  if (per_constraint_detail) {
    auto& detail = reply["per_constraint"] = ordered_json::array();
    for (size_t i = 0; i < report.results.size(); ++i) {
      const auto& [constraint, result] = report.results[i];
      ordered_json entry;
      entry["index"] = i;
      entry["satisfied"] = result.satisfied;
      entry["observed"] = result.observed;
      entry["diagnostic"] = result.diagnostic;
      detail.push_back(std::move(entry));
    }
  }
  res.status = 200;
  res.set_content(reply.dump(), "application/json");
}

}  // namespace

RewardService::RewardService(std::vector<InstructionInstance> dataset)
    : dataset_(std::move(dataset)) {
  for (std::size_t i = 0; i < dataset_.size(); ++i)
    index_[dataset_[i].id] = i;
}

RewardService::~RewardService() = default;

void RewardService::attach(httplib::Server& server) {
  server.Get("/healthz",
             [this](const httplib::Request&, httplib::Response& res) {
               ordered_json body;
               body["status"] = "ok";
               body["instances"] = dataset_.size();
               res.set_content(body.dump(), "application/json");
             });
  server.Post("/v1/reward",
              [this](const httplib::Request& req, httplib::Response& res) {
                handle_scoring(index_, dataset_, req, res, false);
              });
  server.Post("/v1/verify",
              [this](const httplib::Request& req, httplib::Response& res) {
                handle_scoring(index_, dataset_, req, res, true);
              });
}

bool RewardService::listen(const std::string& host, int port) {
  owned_server_ = std::make_unique<httplib::Server>();
  attach(*owned_server_);
  return owned_server_->listen(host, port);
}

void RewardService::stop() {
  if (owned_server_) owned_server_->stop();
}

}  // namespace ifkit
