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

#include "ifkit/chat_client.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ifkit/error.hpp"

namespace ifkit {

namespace {

bool retriable_status(int status) {
  return status == 408 || status == 429 || status >= 500;
}

}  // namespace

HttpChatClient::HttpChatClient(HttpClientConfig config)
    : config_(std::move(config)) {
  if (config_.max_parallel < 1) config_.max_parallel = 1;
}

ChatResponse HttpChatClient::send(const ChatRequest& request) {
  {
    std::unique_lock lock(mutex_);
    slot_available_.wait(lock,
                         [&] { return in_flight_ < config_.max_parallel; });
    ++in_flight_;
  }
  struct SlotRelease {
    HttpChatClient* self;
    ~SlotRelease() {
      std::lock_guard lock(self->mutex_);
      --self->in_flight_;
      self->slot_available_.notify_one();
    }
  } release{this};

  nlohmann::json body;
  body["model"] =
      request.model.empty() ? config_.model_name : request.model;
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  auto& messages = body["messages"] = nlohmann::json::array();
  for (const auto& m : request.messages)
    messages.push_back({{"role", m.role}, {"content", m.content}});
  const std::string payload = body.dump();

  std::string last_error;
  auto backoff = config_.retry.initial_backoff;
  for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(
          std::chrono::milliseconds(static_cast<long long>(
              static_cast<double>(backoff.count()) * config_.retry.multiplier)),
          config_.retry.max_backoff);
    }
    httplib::Client cli(config_.endpoint);
    cli.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(
        config_.timeout));
    cli.set_read_timeout(
        std::chrono::duration_cast<std::chrono::seconds>(config_.timeout));
    httplib::Headers headers;
    if (!config_.api_key.empty())
      headers.emplace("Authorization", "Bearer " + config_.api_key);
    auto result = cli.Post(config_.path, headers, payload, "application/json");
    if (!result) {
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status != 200) {
      last_error = "http status " + std::to_string(result->status);
      if (retriable_status(result->status)) continue;
      throw TransportError(last_error + ": " + result->body);
    }
    try {
      const auto json = nlohmann::json::parse(result->body);
      return ChatResponse{
          json.at("choices").at(0).at("message").at("content")
              .get<std::string>()};
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(std::string("malformed completion response: ") +
                           e.what());
    }
  }
  throw TransportError("request failed after " +
                       std::to_string(config_.retry.max_attempts) +
                       " attempts: " + last_error);
}

}  // namespace ifkit
