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

#include "v2r/harness/endpoint.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "v2r/core/hash.hpp"
#include "v2r/error.hpp"

namespace v2r {

void validate(const EndpointConfig& c) {
  if (c.max_in_flight < 1) throw InvalidArgument("endpoint: max in-flight must be at least 1");
  if (c.retry.max_attempts < 1) throw InvalidArgument("endpoint: max attempts must be at least 1");
  if (c.retry.backoff_base_ms < 0) throw InvalidArgument("endpoint: backoff must be non-negative");
  if (!(c.timeout_s > 0)) throw InvalidArgument("endpoint: timeout must be positive");
  if (c.model.empty()) throw InvalidArgument("endpoint: model id is empty");
  parse_base_url(c.base_url);
}

std::optional<std::string> resolve_token(const EndpointConfig& c) {
  if (c.token_env.empty()) return std::nullopt;
  const char* v = std::getenv(c.token_env.c_str());
  if (!v || !*v) {
    throw EndpointError("auth token variable " + c.token_env + " is not set");
  }
  return std::string(v);
}

ParsedUrl parse_base_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw InvalidArgument("endpoint URL lacks a scheme: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw InvalidArgument("endpoint URL scheme must be http or https: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.scheme_host_port = url.substr(0, path_start);
  if (out.scheme_host_port.size() <= scheme_end + 3) throw InvalidArgument("endpoint URL lacks a host: " + url);
  if (path_start != std::string::npos) out.path_prefix = url.substr(path_start);
  while (!out.path_prefix.empty() && out.path_prefix.back() == '/') out.path_prefix.pop_back();
  return out;
}

nlohmann::json build_chat_body(const EndpointConfig& config, const ChatRequest& request) {
  nlohmann::json content = nlohmann::json::array();
  content.push_back({{"type", "text"}, {"text", request.prompt}});
  if (!request.png.empty()) {
    content.push_back({{"type", "image_url"},
                       {"image_url", {{"url", "data:image/png;base64," + base64_encode(request.png)}}}});
  }
  nlohmann::json body{{"model", config.model},
                      {"temperature", config.temperature},
                      {"messages", {{{"role", "user"}, {"content", content}}}}};
  if (config.max_tokens > 0) body["max_tokens"] = config.max_tokens;
  return body;
}

std::optional<std::string> extract_chat_content(const nlohmann::json& response) {
  if (!response.is_object() || !response.contains("choices")) return std::nullopt;
  const auto& choices = response.at("choices");
  if (!choices.is_array() || choices.empty()) return std::nullopt;
  const auto& msg = choices[0].value("message", nlohmann::json::object());
  if (!msg.contains("content")) return std::nullopt;
  const auto& c = msg.at("content");
  if (c.is_string()) return c.get<std::string>();
  if (c.is_array()) {
    std::string out;
    for (const auto& part : c) {
      if (part.is_object() && part.value("type", "") == "text") out += part.value("text", "");
    }
    return out;
  }
  return std::nullopt;
}

HttpChatClient::HttpChatClient(EndpointConfig config, std::optional<std::string> token)
    : config_(std::move(config)), token_(std::move(token)), url_(parse_base_url(config_.base_url)) {
  validate(config_);
}

ChatResponse HttpChatClient::post_json(const std::string& path, const nlohmann::json& body,
                                       nlohmann::json* response_out) {
  using clock = std::chrono::steady_clock;
  const std::string payload = body.dump();
  httplib::Headers headers;
  if (token_) headers.emplace("Authorization", "Bearer " + *token_);

  ChatResponse out;
  const auto start = clock::now();
  for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
    out.attempts = attempt;
    if (attempt > 1) {
      const double wait = config_.retry.backoff_base_ms * std::pow(2.0, attempt - 2);
      std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(wait));
    }
    httplib::Client cli(url_.scheme_host_port);
    const auto timeout = std::chrono::duration<double>(config_.timeout_s);
    const auto secs = static_cast<time_t>(config_.timeout_s);
    const auto usecs = static_cast<time_t>((timeout.count() - static_cast<double>(secs)) * 1e6);
    cli.set_connection_timeout(secs, usecs);
    cli.set_read_timeout(secs, usecs);
    cli.set_write_timeout(secs, usecs);
    auto res = cli.Post(url_.path_prefix + path, headers, payload, "application/json");
    if (!res) {
      out.error = "request failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      out.error = "HTTP " + std::to_string(res->status);
      const bool retryable = res->status == 408 || res->status == 429 || res->status >= 500;
      if (retryable) continue;
      break;
    }
    try {
      auto j = nlohmann::json::parse(res->body);
      if (response_out) *response_out = std::move(j);
      out.ok = true;
      out.error.clear();
      break;
    } catch (const nlohmann::json::exception&) {
      out.error = "response is not JSON";
    }
  }
  out.latency_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return out;
}

ChatResponse HttpChatClient::complete(const ChatRequest& request) {
  nlohmann::json response;
  ChatResponse out = post_json("/chat/completions", build_chat_body(config_, request), &response);
  if (!out.ok) return out;
  if (auto text = extract_chat_content(response)) {
    out.text = std::move(*text);
  } else {
    out.ok = false;
    out.error = "response has no message content";
  }
  return out;
}

}  // namespace v2r
