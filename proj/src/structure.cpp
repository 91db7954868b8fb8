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

#include "ifkit/structure.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <json.hpp>

namespace ifkit {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string_view line = text.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      start = i + 1;
    }
  }
  return lines;
}

int heading_level(std::string_view line) {
  size_t h = 0;
  while (h < line.size() && line[h] == '#') ++h;
  if (h >= 1 && h <= 6 && h < line.size() && line[h] == ' ')
    return static_cast<int>(h);
  return 0;
}

bool has_pipe(std::string_view line) {
  return line.find('|') != std::string_view::npos;
}

bool is_separator_row(std::string_view line) {
  bool has_dash = false;
  for (char c : line) {
    if (c == '-') {
      has_dash = true;
    } else if (c != '|' && c != ':' && c != ' ' && c != '\t') {
      return false;
    }
  }
  return has_dash && has_pipe(line);
}

long long cell_count(std::string_view line) {
  // Split on '|', dropping the empty edge cells produced by leading/trailing
  // pipes.
  std::vector<std::string_view> cells;
  size_t start = 0;
  for (size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '|') {
      cells.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  auto blank = [](std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
  };
  while (!cells.empty() && blank(cells.front())) cells.erase(cells.begin());
  while (!cells.empty() && blank(cells.back())) cells.pop_back();
  return static_cast<long long>(cells.size());
}

}  // namespace

MarkdownStructure markdown_structure(std::string_view text) {
  MarkdownStructure out;
  const auto lines = split_lines(text);
  bool in_quote = false;
  bool in_fence = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.substr(0, 3) == "```") {
      in_fence = !in_fence;
      in_quote = false;
      continue;
    }
    if (in_fence) continue;
    if (!line.empty() && line.front() == '>') {
      if (!in_quote) ++out.blockquote_count;
      in_quote = true;
    } else {
      in_quote = false;
    }
    if (int lvl = heading_level(line); lvl > 0) {
      out.heading_levels.push_back(lvl);
      continue;
    }
    // pipe table: header, separator, data rows
    if (has_pipe(line) && !is_separator_row(line) && i + 1 < lines.size() &&
        is_separator_row(lines[i + 1])) {
      const long long cols = cell_count(line);
      long long rows = 0;
      size_t j = i + 2;
      while (j < lines.size() && has_pipe(lines[j]) &&
             lines[j].substr(0, 3) != "```") {
        ++rows;
        ++j;
      }
      out.tables.emplace_back(rows, cols);
      i = j - 1;
    }
  }
  return out;
}

namespace {

long long object_depth(const nlohmann::json& v) {
  if (v.is_object()) {
    long long inner = 0;
    for (const auto& [key, child] : v.items()) {
      (void)key;
      inner = std::max(inner, object_depth(child));
    }
    return 1 + inner;
  }
  if (v.is_array()) {
    long long inner = 0;
    for (const auto& child : v) inner = std::max(inner, object_depth(child));
    return inner;
  }
  return 0;
}

// Finds the end (exclusive) of a balanced {...} or [...] starting at `start`,
// honoring JSON string escapes. Returns npos when unbalanced.
size_t matching_close(std::string_view text, size_t start) {
  int depth = 0;
  bool in_string = false;
  for (size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
    } else if (c == '"') {
      in_string = true;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      --depth;
      if (depth == 0) return i + 1;
      if (depth < 0) return std::string_view::npos;
    }
  }
  return std::string_view::npos;
}

std::vector<std::string> fenced_blocks(std::string_view text) {
  std::vector<std::string> blocks;
  const auto lines = split_lines(text);
  std::string current;
  bool in_fence = false;
  for (const auto& line : lines) {
    if (line.substr(0, 3) == "```") {
      if (in_fence) {
        blocks.push_back(current);
        current.clear();
      }
      in_fence = !in_fence;
      continue;
    }
    if (in_fence) {
      current.append(line);
      current.push_back('\n');
    }
  }
  return blocks;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

long long json_max_object_depth(std::string_view text) {
  std::string best;
  for (auto& block : fenced_blocks(text)) {
    std::string body = trim(std::move(block));
    if (nlohmann::json::accept(body) && body.size() > best.size()) best = body;
  }
  if (best.empty()) {
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '{' && text[i] != '[') continue;
      const size_t end = matching_close(text, i);
      if (end == std::string_view::npos) continue;
      std::string candidate(text.substr(i, end - i));
      if (nlohmann::json::accept(candidate) && candidate.size() > best.size())
        best = std::move(candidate);
    }
  }
  if (best.empty()) return 0;
  return object_depth(nlohmann::json::parse(best));
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':';
}

}  // namespace

XmlAttributeStats xml_attribute_stats(std::string_view text) {
  XmlAttributeStats stats;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<' || i + 1 >= text.size()) {
      ++i;
      continue;
    }
    const char next = text[i + 1];
    if (next == '/' || next == '!' || next == '?') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    if (!is_name_start(text[j])) {
      ++i;
      continue;
    }
    while (j < text.size() && is_name_char(text[j])) ++j;
    long long attrs = 0;
    bool well_formed = false;
    while (j < text.size()) {
      while (j < text.size() &&
             std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j >= text.size()) break;
      if (text[j] == '>') {
        well_formed = true;
        ++j;
        break;
      }
      if (text[j] == '/' && j + 1 < text.size() && text[j + 1] == '>') {
        well_formed = true;
        j += 2;
        break;
      }
      // attribute: name = "value" | 'value'
      if (!is_name_start(text[j])) break;
      while (j < text.size() && is_name_char(text[j])) ++j;
      while (j < text.size() &&
             std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j >= text.size() || text[j] != '=') break;
      ++j;
      while (j < text.size() &&
             std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j >= text.size() || (text[j] != '"' && text[j] != '\'')) break;
      const char quote = text[j];
      const size_t close = text.find(quote, j + 1);
      if (close == std::string_view::npos) break;
      j = close + 1;
      ++attrs;
    }
    if (well_formed) {
      stats.total_attributes += attrs;
      stats.per_element_max = std::max(stats.per_element_max, attrs);
      i = j;
    } else {
      ++i;
    }
  }
  return stats;
}

}  // namespace ifkit
