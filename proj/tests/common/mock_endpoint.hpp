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

// Loopback chat-completions server with scripted replies.

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

namespace testing_support {

struct Reply {
  int status = 200;
  std::string content;
};

class MockEndpoint {
 public:
  using Handler = std::function<Reply(const nlohmann::json& body)>;

  explicit MockEndpoint(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      nlohmann::json body;
      try {
        body = nlohmann::json::parse(req.body);
      } catch (const std::exception&) {
        res.status = 400;
        return;
      }
      {
        std::lock_guard lock(mu_);
        last_auth_ = req.get_header_value("Authorization");
      }
      const Reply r = handler_(body);
      res.status = r.status;
      if (r.status == 200) {
        nlohmann::json out{{"choices", {{{"index", 0}, {"message", {{"role", "assistant"}, {"content", r.content}}}}}}};
        res.set_content(out.dump(), "application/json");
      } else {
        res.set_content(R"({"error":"scripted"})", "application/json");
      }
    });
    server_.Post("/v1/embeddings", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      const auto body = nlohmann::json::parse(req.body);
      const std::string text = body.at("input").get<std::string>();
      // Two-dimensional embedding: (length, 1).
      nlohmann::json out{{"data", {{{"embedding", {static_cast<double>(text.size()), 1.0}}}}}};
      res.set_content(out.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockEndpoint() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  MockEndpoint(const MockEndpoint&) = delete;
  MockEndpoint& operator=(const MockEndpoint&) = delete;

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  int requests() const { return requests_.load(); }
  std::string last_authorization() const {
    std::lock_guard lock(mu_);
    return last_auth_;
  }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  mutable std::mutex mu_;
  std::string last_auth_;
};

// Prompt text and image data URL of a chat request, empty when absent.
inline std::pair<std::string, std::string> request_parts(const nlohmann::json& body) {
  std::string text, image;
  for (const auto& part : body.at("messages").at(0).at("content")) {
    if (part.at("type") == "text") text = part.at("text").get<std::string>();
    if (part.at("type") == "image_url") image = part.at("image_url").at("url").get<std::string>();
  }
  return {text, image};
}

}  // namespace testing_support
