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

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <string>
#include <vector>

namespace ifkit {

struct ChatMessage {
  std::string role;
  std::string content;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 4096;
};

struct ChatResponse {
  std::string text;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  // Throws TransportError after retries are exhausted.
  virtual ChatResponse send(const ChatRequest& request) = 0;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{5000};
};

struct HttpClientConfig {
  std::string endpoint;  // e.g. http://host:port
  std::string path = "/v1/chat/completions";
  std::string model_name;
  std::string api_key;  // from environment, never persisted
  std::chrono::milliseconds timeout{30000};
  int max_parallel = 4;
  RetryPolicy retry;
};

// OpenAI-style chat completion client over HTTP with bounded concurrency and
// exponential backoff on retriable failures.
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(HttpClientConfig config);
  ChatResponse send(const ChatRequest& request) override;

 private:
  HttpClientConfig config_;
  std::mutex mutex_;
  std::condition_variable slot_available_;
  int in_flight_ = 0;
};

}  // namespace ifkit
