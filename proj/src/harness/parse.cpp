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

#include "v2r/harness/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <regex>

#include "v2r/data.hpp"
#include "v2r/error.hpp"
#include "v2r/metrics/stability.hpp"
#include "v2r/synth/text_matrix.hpp"

namespace v2r {
namespace {

using ojson = nlohmann::ordered_json;

// Unicode minus and dashes become ASCII '-'.
std::string ascii_minus(std::string_view raw) {
  std::string s(raw);
  for (const char* dash : {"\xE2\x88\x92", "\xE2\x80\x93", "\xE2\x80\x94"}) {
    for (auto pos = s.find(dash); pos != std::string::npos; pos = s.find(dash, pos + 1)) {
      s.replace(pos, 3, "-");
    }
  }
  return s;
}

int to_int(const std::string& s) {
  int v = 0;
  const char* begin = s.data() + (s[0] == '+' ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("integer out of range");
  return v;
}

const std::regex& tuple_re() {
  static const std::regex re(
      R"(\(\s*([+-]?\d+)(?:\.0+)?\s*,\s*(?:([+-]?\d+)(?:\.0+)?\s*)?\))");
  return re;
}

const std::regex& pair_re() {
  static const std::regex re(R"(\(\s*([+-]?\d+)(?:\.0+)?\s*,\s*([+-]?\d+)(?:\.0+)?\s*\))");
  return re;
}

std::vector<GridPoint> all_pairs(const std::string& s) {
  std::vector<GridPoint> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pair_re()); it != std::sregex_iterator(); ++it) {
    out.push_back({to_int((*it)[1].str()), to_int((*it)[2].str())});
  }
  return out;
}

Answer parse_tuple(const std::string& s) {
  std::smatch m;
  if (!std::regex_search(s, m, tuple_re())) return Unparseable{};
  Coordinate c;
  c.values.push_back(to_int(m[1].str()));
  if (m[2].matched) c.values.push_back(to_int(m[2].str()));
  return c;
}

Answer parse_position(const std::string& s) {
  std::smatch m;
  if (std::regex_search(s, m, pair_re())) {
    return Coordinate{{to_int(m[1].str()), to_int(m[2].str())}};
  }
  static const std::regex words(R"(row\D*?(\d+)\D+?col(?:umn)?\D*?(\d+))", std::regex::icase);
  if (std::regex_search(s, m, words)) return Coordinate{{to_int(m[1].str()), to_int(m[2].str())}};
  return Unparseable{};
}

Answer parse_path(const std::string& s) {
  for (std::size_t open = s.find('['); open != std::string::npos; open = s.find('[', open + 1)) {
    const auto close = s.find(']', open);
    if (close == std::string::npos) break;
    auto pts = all_pairs(s.substr(open, close - open + 1));
    if (!pts.empty()) return CoordinatePath{std::move(pts)};
  }
  auto pts = all_pairs(s);
  if (!pts.empty()) return CoordinatePath{std::move(pts)};
  return Unparseable{};
}

std::string collapse_whitespace(std::string_view raw) {
  std::string out;
  bool pending = false;
  for (unsigned char c : raw) {
    if (std::isspace(c)) {
      pending = !out.empty();
    } else {
      if (pending) out += ' ';
      pending = false;
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string corrupted(const OcrTruth& t) {
  std::string s = t.source;
  for (const auto& r : t.replacements) {
    if (r.index >= 0 && r.index < static_cast<int>(s.size())) s[static_cast<std::size_t>(r.index)] = r.replacement;
  }
  return s;
}

}  // namespace

AnswerKind answer_kind(Task task, std::string_view prompt_id) {
  switch (task) {
    case Task::kObject:
    case Task::kDirection:
      return AnswerKind::kLabel;
    case Task::kCoordinate:
      return AnswerKind::kTuple;
    case Task::kPath:
      return AnswerKind::kPath;
    case Task::kTextMatrix:
      if (prompt_id == "text-word") return AnswerKind::kLabel;
      if (prompt_id == "text-position") return AnswerKind::kTuple;
      if (prompt_id == "text-count") return AnswerKind::kCount;
      return AnswerKind::kText;
    case Task::kOcr:
    case Task::kExtendedBenchmark:
      return AnswerKind::kText;
  }
  return AnswerKind::kText;
}

bool is_unparseable(const Answer& a) { return std::holds_alternative<Unparseable>(a); }

std::string normalize_answer_text(std::string_view raw) {
  const std::string s = ascii_minus(raw);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    const bool keep = std::isalnum(c) || c >= 0x80 || c == '(' || c == ')' || c == ',' || c == '[' ||
                      c == ']' ||
                      (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])));
    out += keep ? static_cast<char>(std::tolower(c)) : ' ';
  }
  return collapse_whitespace(out);
}

Answer expected_answer(const SampleRecord& record) {
  const AnswerKind kind = answer_kind(record.task, record.prompt_id);
  if (const auto* wp = std::get_if<WordPlacement>(&record.ground_truth)) {
    switch (kind) {
      case AnswerKind::kLabel:
        return Label{wp->word};
      case AnswerKind::kTuple:
        return Coordinate{{wp->row, wp->col}};
      case AnswerKind::kCount:
        return Count{wp->count};
      default:
        return FreeText{wp->word};
    }
  }
  if (const auto* ocr = std::get_if<OcrTruth>(&record.ground_truth)) {
    return FreeText{collapse_whitespace(corrupted(*ocr))};
  }
  if (record.task == Task::kExtendedBenchmark) {
    return FreeText{normalize_answer_text(std::get<Label>(record.ground_truth).value)};
  }
  return std::visit([](const auto& gt) -> Answer {
    using T = std::decay_t<decltype(gt)>;
    if constexpr (std::is_same_v<T, Label> || std::is_same_v<T, Coordinate> ||
                  std::is_same_v<T, CoordinatePath>) {
      return gt;
    } else {
      return Unparseable{};
    }
  }, record.ground_truth);
}

std::string format_answer(const Answer& a) {
  return std::visit([](const auto& v) -> std::string {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Unparseable>) {
      return "unparseable";
    } else if constexpr (std::is_same_v<T, Label>) {
      return v.value;
    } else if constexpr (std::is_same_v<T, Coordinate>) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.values.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v.values[i]);
      }
      return s + (v.values.size() == 1 ? ",)" : ")");
    } else if constexpr (std::is_same_v<T, CoordinatePath>) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.points.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(v.points[i][0]) + ", " + std::to_string(v.points[i][1]) + ")";
      }
      return s + "]";
    } else if constexpr (std::is_same_v<T, Count>) {
      return std::to_string(v.value);
    } else {
      return v.value;
    }
  }, a);
}

ojson answer_to_json(const Answer& a) {
  return std::visit([](const auto& v) -> ojson {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Unparseable>) {
      return nullptr;
    } else if constexpr (std::is_same_v<T, Label> || std::is_same_v<T, FreeText>) {
      return v.value;
    } else if constexpr (std::is_same_v<T, Coordinate>) {
      return v.values;
    } else if constexpr (std::is_same_v<T, CoordinatePath>) {
      ojson arr = ojson::array();
      for (const auto& p : v.points) arr.push_back({p[0], p[1]});
      return arr;
    } else {
      return v.value;
    }
  }, a);
}

Answer answer_from_json(AnswerKind kind, const ojson& j) {
  if (j.is_null()) return Unparseable{};
  try {
    switch (kind) {
      case AnswerKind::kLabel:
        return Label{j.get<std::string>()};
      case AnswerKind::kTuple:
        return Coordinate{j.get<std::vector<int>>()};
      case AnswerKind::kPath: {
        CoordinatePath p;
        for (const auto& pt : j) {
          if (!pt.is_array() || pt.size() != 2) throw FormatError("path point must be [x, y]");
          p.points.push_back({pt[0].get<int>(), pt[1].get<int>()});
        }
        return p;
      }
      case AnswerKind::kCount:
        return Count{j.get<int>()};
      case AnswerKind::kText:
        return FreeText{j.get<std::string>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("parsed answer: ") + e.what());
  }
  return Unparseable{};
}

const AnswerParser& AnswerParser::builtin() {
  static const AnswerParser parser = from_json(nlohmann::json::parse(data::synonyms_json()));
  return parser;
}

AnswerParser AnswerParser::from_json(const nlohmann::json& j) {
  AnswerParser p;
  auto load = [&](const char* key, std::vector<Phrase>& into) {
    if (!j.contains(key) || !j.at(key).is_object()) {
      throw InvalidArgument(std::string("synonyms.") + key + ": expected an object");
    }
    for (const auto& [label, phrases] : j.at(key).items()) {
      into.push_back({tokenize(label), label});
      for (const auto& ph : phrases) into.push_back({tokenize(ph.get<std::string>()), label});
    }
  };
  load("direction", p.directions_);
  load("object", p.objects_);
  if (j.contains("numbers")) {
    for (const auto& [word, value] : j.at("numbers").items()) p.numbers_.emplace_back(word, value.get<int>());
  }
  for (const auto& w : text_matrix_words()) p.text_words_.push_back({tokenize(w), w});
  return p;
}

void AnswerParser::add_object_label(const std::string& label) {
  auto tokens = tokenize(label);
  if (tokens.empty()) return;
  objects_.push_back({std::move(tokens), label});
}

std::optional<std::string> AnswerParser::match_phrases(const std::vector<Phrase>& phrases,
                                                       const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Phrase* best = nullptr;
    for (const auto& ph : phrases) {
      if (ph.tokens.empty() || i + ph.tokens.size() > tokens.size()) continue;
      if (!std::equal(ph.tokens.begin(), ph.tokens.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      if (!best || ph.tokens.size() > best->tokens.size()) best = &ph;
    }
    if (best) return best->label;
  }
  return std::nullopt;
}

Answer AnswerParser::parse(AnswerKind kind, Task task, std::string_view raw) const {
  try {
    const std::string text = ascii_minus(raw);
    switch (kind) {
      case AnswerKind::kLabel: {
        const auto tokens = tokenize(text);
        const auto& table = task == Task::kDirection ? directions_
                            : task == Task::kObject  ? objects_
                                                     : text_words_;
        if (auto m = match_phrases(table, tokens)) return Label{*m};
        if (task == Task::kTextMatrix && tokens.size() == 1) return Label{tokens[0]};
        return Unparseable{};
      }
      case AnswerKind::kTuple:
        return task == Task::kTextMatrix ? parse_position(text) : parse_tuple(text);
      case AnswerKind::kPath:
        return parse_path(text);
      case AnswerKind::kCount:
        for (const auto& tok : tokenize(text)) {
          if (std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
            return Count{to_int(tok)};
          }
          for (const auto& [word, value] : numbers_) {
            if (tok == word) return Count{value};
          }
        }
        return Unparseable{};
      case AnswerKind::kText: {
        std::string s = task == Task::kOcr ? collapse_whitespace(text) : normalize_answer_text(text);
        if (s.empty()) return Unparseable{};
        return FreeText{std::move(s)};
      }
    }
  } catch (const std::exception&) {
    // Out-of-range integers and similar oddities.
  }
  return Unparseable{};
}

Answer AnswerParser::parse(const SampleRecord& record, std::string_view raw) const {
  return parse(answer_kind(record.task, record.prompt_id), record.task, raw);
}

Answer parse_answer(Task task, std::string_view raw) {
  const std::string_view prompt = task == Task::kTextMatrix ? "text-word" : to_string(task);
  return AnswerParser::builtin().parse(answer_kind(task, prompt), task, raw);
}

bool answer_is_correct(const SampleRecord& record, const Answer& answer) {
  if (is_unparseable(answer)) return false;
  return answer == expected_answer(record);
}

}  // namespace v2r
