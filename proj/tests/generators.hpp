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

// Random-input builders whose expected measurement is known by construction,
// so they act as oracles independent of the implementation under test.

#include <random>
#include <string>
#include <vector>

namespace ifkit::testgen {

struct CountedText {
  std::string text;
  long long expected = 0;
};

// Tokens are chosen so none can be mistaken for a markdown marker at line
// start and none contains a sentence terminator.
inline CountedText random_word_text(std::mt19937_64& rng) {
  struct Piece {
    const char* text;
    long long words;
  };
  static const std::vector<Piece> pieces = {
      {"alpha", 1},  {"Beta7", 1},   {"it's", 1},  {"x", 1},
      {"C3PO", 1},   {"~~~", 0},     {"(,)", 0},   {"\xe4\xbd\xa0", 1},
      {"\xe4\xb8\x96\xe7\x95\x8c", 2}, {"caf\xc3\xa9", 1}, {"&&", 0},
      {"ab\xe4\xb8\xad", 2}};
  std::uniform_int_distribution<int> count(0, 40);
  std::uniform_int_distribution<size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> sep(0, 4);
  CountedText out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const Piece& piece = pieces[pick(rng)];
    out.text += piece.text;
    out.expected += piece.words;
    switch (sep(rng)) {
      case 0: out.text += "\n"; break;
      case 1: out.text += "  "; break;
      case 2: out.text += "\t"; break;
      default: out.text += " "; break;
    }
  }
  return out;
}

inline CountedText random_sentence_text(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {"alpha", "beta", "gamma",
                                                 "delta"};
  static const std::vector<std::string> terminators = {
      ".", "!", "?", "...", "?!", "\xe3\x80\x82", "\xef\xbc\x81"};
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<int> sentence_len(1, 5);
  std::uniform_int_distribution<size_t> pick_word(0, words.size() - 1);
  std::uniform_int_distribution<size_t> pick_term(0, terminators.size() - 1);
  std::uniform_int_distribution<int> tail(0, 3);
  CountedText out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int len = sentence_len(rng);
    for (int w = 0; w < len; ++w) out.text += words[pick_word(rng)] + " ";
    out.text += terminators[pick_term(rng)];
    out.text += " ";
    ++out.expected;
  }
  if (tail(rng) == 0) {
    out.text += words[pick_word(rng)];
    ++out.expected;
  }
  return out;
}

inline CountedText random_paragraph_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> lines(1, 4);
  std::uniform_int_distribution<int> gap(2, 4);
  CountedText out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int l = lines(rng);
    for (int k = 0; k < l; ++k) {
      out.text += "line text";
      out.text += "\n";
    }
    ++out.expected;
    const int g = gap(rng);
    for (int k = 1; k < g; ++k) out.text += "\n";
  }
  return out;
}

// Phrase search material over a two-letter alphabet plus spaces.
inline std::string random_ab_text(std::mt19937_64& rng, int max_len = 24) {
  static const char alphabet[] = {'a', 'b', ' '};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 2);
  std::string out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(alphabet[pick(rng)]);
  return out;
}

// Naive reference scanner: try every position, greedy non-overlapping.
inline long long naive_occurrences(const std::string& text,
                                   const std::string& phrase,
                                   bool word_boundary) {
  if (phrase.empty()) return 0;
  auto is_alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  };
  long long n = 0;
  size_t pos = 0;
  while (pos + phrase.size() <= text.size()) {
    if (text.compare(pos, phrase.size(), phrase) == 0) {
      const size_t end = pos + phrase.size();
      const bool left = !word_boundary || pos == 0 || !is_alnum(text[pos - 1]);
      const bool right =
          !word_boundary || end == text.size() || !is_alnum(text[end]);
      if (left && right) {
        ++n;
        pos = end;
        continue;
      }
    }
    ++pos;
  }
  return n;
}

// Random JSON with a known maximum object depth, wrapped in a fenced block.
inline CountedText random_json_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> depth_dist(0, 5);
  const int target = depth_dist(rng);
  CountedText out;
  out.expected = target;
  std::string json;
  if (target == 0) {
    json = "[1, 2, \"x{y}\"]";
  } else {
    std::uniform_int_distribution<int> wrap(0, 1);
    std::string open, close;
    for (int d = 0; d < target; ++d) {
      if (wrap(rng) == 1) {
        // An array layer between objects stays transparent.
        open += "{\"k\": [";
        close = "]}" + close;
      } else {
        open += "{\"k\": ";
        close = "}" + close;
      }
    }
    json = open + "\"leaf {not json}\"" + close;
  }
  out.text = "prose before\n```json\n" + json + "\n```\nprose after";
  return out;
}

struct TableDims {
  std::string text;
  long long rows = 0;
  long long cols = 0;
};

inline TableDims random_table_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rows_dist(1, 6);
  std::uniform_int_distribution<int> cols_dist(1, 5);
  TableDims out;
  out.rows = rows_dist(rng);
  out.cols = cols_dist(rng);
  std::string table;
  auto row = [&](const std::string& cell) {
    std::string r = "|";
    for (long long c = 0; c < out.cols; ++c) r += " " + cell + " |";
    return r + "\n";
  };
  table += row("h");
  table += row("---");
  for (long long r = 0; r < out.rows; ++r) table += row("d");
  out.text = "intro text\n\n" + table + "\nclosing text\n";
  return out;
}

}  // namespace ifkit::testgen
