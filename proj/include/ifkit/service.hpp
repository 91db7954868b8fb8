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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ifkit/constraint.hpp"

namespace httplib {
class Server;
}

namespace ifkit {

// Stateless reward and verification endpoint backed by a read-only dataset.
// Routes:
//   GET  /healthz    status and instance count
//   POST /v1/reward  {"instance_id" | "constraints", "output"} -> counts
//   POST /v1/verify  same payload -> counts plus per-constraint detail
// Errors: 400 malformed request, 404 unknown instance id, 422 invalid inline
// constraints. Requests resolve either a registered instance id or inline
// constraints, never both.
class RewardService {
 public:
  explicit RewardService(std::vector<InstructionInstance> dataset);
  ~RewardService();

  RewardService(const RewardService&) = delete;
  RewardService& operator=(const RewardService&) = delete;

  // Registers the routes on an externally owned server. Tests use this to
  // drive requests without binding a socket.
  void attach(httplib::Server& server);

  // Blocks until stop(). Returns false when the bind fails.
  bool listen(const std::string& host, int port);
  void stop();

  std::size_t instance_count() const { return dataset_.size(); }

 private:
  std::vector<InstructionInstance> dataset_;
  std::map<std::string, std::size_t> index_;
  std::unique_ptr<httplib::Server> owned_server_;
};

}  // namespace ifkit
