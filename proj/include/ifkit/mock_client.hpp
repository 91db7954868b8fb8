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

#include "ifkit/chat_client.hpp"
#include "ifkit/constraint.hpp"

namespace ifkit {

// Deterministic stand-in for a remote model. Recognizes the four prompt
// shapes by their fixed marker lines and answers in the exact response
// formats those prompts demand. Identical (seed, prompt) pairs always yield
// identical responses, so pipeline runs replay byte for byte.
class MockChatClient : public ChatClient {
 public:
  explicit MockChatClient(std::uint64_t seed = 0) : seed_(seed) {}
  ChatResponse send(const ChatRequest& request) override;

 private:
  std::uint64_t seed_;
};

// The fixed constraint menu the mock draws from for one category. Exposed
// for tests that assert menu picks never conflict with one another.
std::vector<Constraint> mock_constraint_menu(Category category);

}  // namespace ifkit
