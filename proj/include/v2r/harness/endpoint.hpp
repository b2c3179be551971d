// Copyright 2026 The v2r Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace v2r {

struct RetryPolicy {
  int max_attempts = 3;
  double backoff_base_ms = 500.0;  // wait base * 2^(attempt - 1) before a retry
};

struct EndpointConfig {
  std::string base_url = "http://127.0.0.1:8000/v1";  // chat path is appended
  std::string model;
  std::string token_env = "V2R_API_KEY";  // empty: send no Authorization header
  int max_in_flight = 4;
  RetryPolicy retry;
  double timeout_s = 60.0;
  double temperature = 0.0;
  int max_tokens = 0;  // 0: leave to the server
};

// Throws InvalidArgument for in-flight < 1, attempts < 1, a malformed URL or
// an empty model id.
void validate(const EndpointConfig& config);

// Reads the token named by config.token_env. Throws EndpointError when the
// variable is named but unset, so runs abort before any request.
std::optional<std::string> resolve_token(const EndpointConfig& config);

struct ChatRequest {
  std::string prompt;
  std::vector<std::uint8_t> png;  // empty for text-only requests
};

struct ChatResponse {
  bool ok = false;
  std::string text;
  std::string error;
  int attempts = 0;
  double latency_ms = 0.0;
};

// Transport for chat completions. Implementations must be safe to call from
// several threads.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// Chat-completions request body with the image inlined as a base64 data URL.
nlohmann::json build_chat_body(const EndpointConfig& config, const ChatRequest& request);

// choices[0].message.content as text; array content parts are concatenated.
std::optional<std::string> extract_chat_content(const nlohmann::json& response);

struct ParsedUrl {
  std::string scheme_host_port;  // "http://host:port"
  std::string path_prefix;       // "/v1", no trailing slash
};
ParsedUrl parse_base_url(const std::string& url);

// HTTP(S) client with retries and exponential backoff. Connection errors,
// 408, 429 and 5xx are retried; other statuses fail at once.
class HttpChatClient : public ChatClient {
 public:
  HttpChatClient(EndpointConfig config, std::optional<std::string> token);
  ChatResponse complete(const ChatRequest& request) override;

  // POSTs `body` to `<prefix><path>` with the same retry policy.
  ChatResponse post_json(const std::string& path, const nlohmann::json& body,
                         nlohmann::json* response_out);

 private:
  EndpointConfig config_;
  std::optional<std::string> token_;
  ParsedUrl url_;
};

}  // namespace v2r
