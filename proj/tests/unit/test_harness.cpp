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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "../common/mock_endpoint.hpp"
#include "v2r/core/manifest.hpp"
#include "v2r/error.hpp"
#include "v2r/harness/cache.hpp"
#include "v2r/harness/endpoint.hpp"
#include "v2r/harness/eval.hpp"
#include "v2r/harness/parse.hpp"
#include "v2r/harness/prompts.hpp"
#include "v2r/image/png.hpp"

namespace v2r {
namespace {

namespace fs = std::filesystem;
using testing_support::MockEndpoint;
using testing_support::Reply;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("v2r_harness_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

TEST(Parse, Directions) {
  auto p = [](std::string_view s) { return parse_answer(Task::kDirection, s); };
  EXPECT_EQ(p("The arrow points to the upper right."), Answer(Label{"top-right"}));
  EXPECT_EQ(p("top-left"), Answer(Label{"top-left"}));
  EXPECT_EQ(p("It points down"), Answer(Label{"down"}));
  EXPECT_EQ(p("Left."), Answer(Label{"left"}));
  EXPECT_TRUE(is_unparseable(p("I cannot tell.")));
}

TEST(Parse, Coordinates) {
  auto p = [](std::string_view s) { return parse_answer(Task::kCoordinate, s); };
  EXPECT_EQ(p("The point is at (3, -7)."), Answer(Coordinate{{3, -7}}));
  EXPECT_EQ(p("(4,)"), Answer(Coordinate{{4}}));
  EXPECT_EQ(p("(2.0, 5.0)"), Answer(Coordinate{{2, 5}}));
  EXPECT_EQ(p("(\xe2\x88\x92" "2, 1)"), Answer(Coordinate{{-2, 1}}));
  EXPECT_TRUE(is_unparseable(p("no idea")));
}

TEST(Parse, Paths) {
  auto p = [](std::string_view s) { return parse_answer(Task::kPath, s); };
  EXPECT_EQ(p("[(0, 0), (5, -5), (1, 2)]"), Answer(CoordinatePath{{{0, 0}, {5, -5}, {1, 2}}}));
  EXPECT_EQ(p("Start at (1, 1) then go to (2, 2)."), Answer(CoordinatePath{{{1, 1}, {2, 2}}}));
  EXPECT_TRUE(is_unparseable(p("a line")));
}

TEST(Parse, TextMatrixPrompts) {
  const auto& parser = AnswerParser::builtin();
  EXPECT_EQ(parser.parse(AnswerKind::kLabel, Task::kTextMatrix, "The word is ZEBRA."), Answer(Label{"zebra"}));
  EXPECT_EQ(parser.parse(AnswerKind::kTuple, Task::kTextMatrix, "(3, 12)"), Answer(Coordinate{{3, 12}}));
  EXPECT_EQ(parser.parse(AnswerKind::kTuple, Task::kTextMatrix, "Row 4, column 9"), Answer(Coordinate{{4, 9}}));
  EXPECT_EQ(parser.parse(AnswerKind::kCount, Task::kTextMatrix, "It appears once: 1"), Answer(Count{1}));
  EXPECT_EQ(parser.parse(AnswerKind::kCount, Task::kTextMatrix, "two times"), Answer(Count{2}));
  EXPECT_EQ(answer_kind(Task::kTextMatrix, "text-count"), AnswerKind::kCount);
}

TEST(Parse, FormatsAndJson) {
  EXPECT_EQ(format_answer(Coordinate{{3, 7}}), "(3, 7)");
  EXPECT_EQ(format_answer(Coordinate{{0}}), "(0,)");
  EXPECT_EQ(format_answer(CoordinatePath{{{0, 0}, {5, 5}}}), "[(0, 0), (5, 5)]");
  EXPECT_EQ(format_answer(Unparseable{}), "unparseable");
  for (const Answer& a : {Answer(Label{"up"}), Answer(Coordinate{{1, 2}}), Answer(CoordinatePath{{{1, 2}, {3, 4}}}),
                          Answer(Count{3})}) {
    const AnswerKind k = std::holds_alternative<Label>(a)        ? AnswerKind::kLabel
                         : std::holds_alternative<Coordinate>(a) ? AnswerKind::kTuple
                         : std::holds_alternative<Count>(a)      ? AnswerKind::kCount
                                                                 : AnswerKind::kPath;
    EXPECT_EQ(answer_from_json(k, answer_to_json(a)), a);
  }
  EXPECT_TRUE(is_unparseable(answer_from_json(AnswerKind::kLabel, nullptr)));
  EXPECT_THROW(answer_from_json(AnswerKind::kPath, "up"), FormatError);
}

TEST(Parse, CorrectnessAgainstRecord) {
  SampleRecord r;
  r.id = "a";
  r.task = Task::kDirection;
  r.ground_truth = Label{"down"};
  r.prompt_id = "direction";
  EXPECT_TRUE(answer_is_correct(r, Label{"down"}));
  EXPECT_FALSE(answer_is_correct(r, Label{"up"}));
  EXPECT_FALSE(answer_is_correct(r, Unparseable{}));
}

TEST(Prompts, RenderFillsMatrixAndWord) {
  const auto dir = fresh_dir("prompts");
  fs::create_directories(dir / "texts");
  std::ofstream(dir / "texts/m.txt") << "* c a t\n* * * *\n";
  SampleRecord r;
  r.id = "m-position";
  r.task = Task::kTextMatrix;
  r.ground_truth = WordPlacement{"cat", 0, 1, 1};
  r.prompt_id = "text-position";
  r.params["text_path"] = "texts/m.txt";
  const std::string p = PromptTable::builtin().render(r, dir);
  EXPECT_NE(p.find("\"cat\""), std::string::npos);
  EXPECT_NE(p.find("* c a t\n* * * *"), std::string::npos);
  EXPECT_EQ(p.find("{matrix}"), std::string::npos);
  r.params["text_path"] = "texts/missing.txt";
  EXPECT_THROW(PromptTable::builtin().render(r, dir), IoError);
  EXPECT_EQ(fill_template("{a} {b}", {{"a", "x"}}), "x {b}");
  EXPECT_THROW(PromptTable::builtin().get("nope"), InvalidArgument);
}

TEST(Endpoint, BodyAndUrl) {
  EndpointConfig c;
  c.model = "m";
  const nlohmann::json body = build_chat_body(c, {"hi", {1, 2, 3}});
  EXPECT_EQ(body["model"], "m");
  const auto [text, image] = testing_support::request_parts(body);
  EXPECT_EQ(text, "hi");
  EXPECT_EQ(image, "data:image/png;base64,AQID");
  const auto u = parse_base_url("https://example.com:8443/v1/");
  EXPECT_EQ(u.scheme_host_port, "https://example.com:8443");
  EXPECT_EQ(u.path_prefix, "/v1");
  EXPECT_THROW(parse_base_url("ftp://x"), InvalidArgument);
  EXPECT_EQ(*extract_chat_content(nlohmann::json::parse(R"({"choices":[{"message":{"content":"ok"}}]})")), "ok");
  EXPECT_FALSE(extract_chat_content(nlohmann::json::parse(R"({"choices":[]})")));
}

TEST(Endpoint, ValidationAndToken) {
  EndpointConfig c;
  EXPECT_THROW(validate(c), InvalidArgument);  // no model
  c.model = "m";
  c.max_in_flight = 0;
  EXPECT_THROW(validate(c), InvalidArgument);
  c.max_in_flight = 1;
  c.token_env = "V2R_TEST_UNSET_TOKEN_VAR";
  ::unsetenv(c.token_env.c_str());
  EXPECT_THROW(resolve_token(c), EndpointError);
  ::setenv(c.token_env.c_str(), "secret", 1);
  EXPECT_EQ(*resolve_token(c), "secret");
  ::unsetenv(c.token_env.c_str());
  c.token_env.clear();
  EXPECT_FALSE(resolve_token(c));
}

TEST(Endpoint, RetriesTransientErrors) {
  std::atomic<int> calls{0};
  MockEndpoint server([&](const nlohmann::json&) {
    return ++calls < 3 ? Reply{503, ""} : Reply{200, "up"};
  });
  EndpointConfig c;
  c.base_url = server.base_url();
  c.model = "m";
  c.retry = {3, 1.0};
  HttpChatClient client(c, std::string("tok"));
  const ChatResponse r = client.complete({"q", {}});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.text, "up");
  EXPECT_EQ(r.attempts, 3);
  EXPECT_EQ(server.last_authorization(), "Bearer tok");
}

TEST(Endpoint, ClientErrorsAreNotRetried) {
  MockEndpoint server([](const nlohmann::json&) { return Reply{400, ""}; });
  EndpointConfig c;
  c.base_url = server.base_url();
  c.model = "m";
  c.retry = {3, 1.0};
  HttpChatClient client(c, std::nullopt);
  const ChatResponse r = client.complete({"q", {}});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.attempts, 1);
  EXPECT_EQ(server.requests(), 1);
}

TEST(Endpoint, UnreachableServerFailsAfterRetries) {
  EndpointConfig c;
  c.base_url = "http://127.0.0.1:9/v1";
  c.model = "m";
  c.retry = {2, 1.0};
  c.timeout_s = 2;
  HttpChatClient client(c, std::nullopt);
  const ChatResponse r = client.complete({"q", {}});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.attempts, 2);
}

TEST(Cache, RoundTripAndMalformedLines) {
  const auto dir = fresh_dir("cache");
  const auto path = dir / "cache.jsonl";
  {
    ResponseCache c(path);
    c.append({"m", "s1", "h1", "up", 1, 12.5});
    EXPECT_TRUE(c.lookup("m", "s1", "h1"));
  }
  ResponseCache again(path);
  ASSERT_TRUE(again.lookup("m", "s1", "h1"));
  EXPECT_EQ(again.lookup("m", "s1", "h1")->raw, "up");
  EXPECT_FALSE(again.lookup("m", "s1", "h2"));
  EXPECT_FALSE(again.lookup("other", "s1", "h1"));
  std::ofstream(path, std::ios::app) << "garbage\n";
  try {
    ResponseCache bad(path);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

// Answers "down" for every request, failing records whose prompt says so.
class FakeClient : public ChatClient {
 public:
  ChatResponse complete(const ChatRequest& req) override {
    ++calls;
    ChatResponse r;
    r.attempts = 1;
    if (req.png.empty()) {
      r.error = "no image";
      return r;
    }
    r.ok = true;
    r.text = "It points down.";
    return r;
  }
  std::atomic<int> calls{0};
};

Manifest small_manifest(const fs::path& dir, int n) {
  fs::create_directories(dir / "images");
  Manifest m;
  for (int i = 0; i < n; ++i) {
    SampleRecord r;
    r.id = "d" + std::to_string(i);
    r.task = Task::kDirection;
    r.image_path = "images/" + r.id + ".png";
    r.ground_truth = Label{i % 2 ? "down" : "up"};
    r.prompt_id = "direction";
    write_png(Image(4, 4, Rgba{static_cast<std::uint8_t>(i), 0, 0, 255}), dir / *r.image_path);
    m.records.push_back(r);
  }
  return m;
}

TEST(Eval, OrderCacheAndConcurrency) {
  const auto dir = fresh_dir("eval");
  const Manifest m = small_manifest(dir, 12);
  FakeClient client;
  EvalOptions o;
  o.model = "fake";
  o.cache_path = dir / "cache.jsonl";
  o.max_in_flight = 1;
  const EvalResult a = run_eval(m, dir, client, o);
  ASSERT_EQ(a.outputs.size(), 12u);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(a.outputs[i].sample_id, m.records[i].id);
  EXPECT_EQ(a.summary.requested, 12u);
  EXPECT_EQ(a.outputs[0].parsed, Answer(Label{"down"}));
  write_outputs(a.outputs, dir / "a.jsonl");

  o.cache_path = dir / "cache8.jsonl";
  o.max_in_flight = 8;
  const EvalResult b = run_eval(m, dir, client, o);
  write_outputs(b.outputs, dir / "b.jsonl");
  EXPECT_EQ(slurp(dir / "a.jsonl"), slurp(dir / "b.jsonl"));

  const int before = client.calls;
  const EvalResult c = run_eval(m, dir, client, o);
  EXPECT_EQ(client.calls, before);
  EXPECT_EQ(c.summary.cached, 12u);
  write_outputs(c.outputs, dir / "c.jsonl");
  EXPECT_EQ(slurp(dir / "a.jsonl"), slurp(dir / "c.jsonl"));

  const auto back = read_outputs(dir / "a.jsonl", m);
  ASSERT_EQ(back.size(), 12u);
  EXPECT_EQ(back[3].parsed, a.outputs[3].parsed);
  EXPECT_EQ(back[3].raw, a.outputs[3].raw);
}

TEST(Eval, FailuresAreMarkedAndNotCached) {
  const auto dir = fresh_dir("eval_fail");
  Manifest m = small_manifest(dir, 2);
  SampleRecord text;
  text.id = "ext";
  text.task = Task::kExtendedBenchmark;
  text.ground_truth = Label{"yes"};
  text.prompt_id = "extended-benchmark";
  text.params["question"] = "Is it?";
  m.records.push_back(text);
  FakeClient client;
  EvalOptions o;
  o.model = "fake";
  o.cache_path = dir / "cache.jsonl";
  const EvalResult r = run_eval(m, dir, client, o);
  EXPECT_EQ(r.summary.failed, 1u);
  EXPECT_TRUE(r.outputs[2].failed);
  EXPECT_EQ(ResponseCache(o.cache_path).size(), 2u);
  write_outputs(r.outputs, dir / "out.jsonl");
  EXPECT_NE(slurp(dir / "out.jsonl").find("\"status\":\"failed\""), std::string::npos);
}

TEST(Eval, ReadOutputsRejectsUnknownIds) {
  const auto dir = fresh_dir("eval_ids");
  const Manifest m = small_manifest(dir, 1);
  std::ofstream(dir / "o.jsonl") << R"({"id":"zzz","model":"m","status":"ok","raw":"up","parsed":"up","attempts":1})"
                                 << "\n";
  EXPECT_THROW(read_outputs(dir / "o.jsonl", m), FormatError);
}

TEST(Eval, MissingTokenAbortsBeforeRequests) {
  const auto dir = fresh_dir("eval_auth");
  const Manifest m = small_manifest(dir, 3);
  write_manifest(m.records, dir / "manifest.jsonl");
  MockEndpoint server([](const nlohmann::json&) { return Reply{200, "up"}; });
  EndpointConfig c;
  c.base_url = server.base_url();
  c.model = "m";
  c.token_env = "V2R_TEST_MISSING_TOKEN";
  ::unsetenv(c.token_env.c_str());
  EXPECT_THROW(run_eval(dir / "manifest.jsonl", c, dir / "cache.jsonl"), EndpointError);
  EXPECT_EQ(server.requests(), 0);
}

}  // namespace
}  // namespace v2r
