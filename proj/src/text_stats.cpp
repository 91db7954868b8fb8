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

#include "ifkit/text_stats.hpp"

#include <cctype>
#include <vector>

#include "ifkit/utf8.hpp"

namespace ifkit {

namespace utf8 {

char32_t decode(std::string_view s, size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

std::vector<char32_t> decode_all(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) out.push_back(decode(s, i));
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

}  // namespace utf8

namespace {

bool is_ascii_alnum(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
         (cp >= 'a' && cp <= 'z');
}

// Punctuation-like codepoints that should not make a token a word.
bool is_nonword_unicode(char32_t cp) {
  if (cp >= 0x2000 && cp <= 0x206F) return true;  // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return true;  // CJK punctuation
  if (cp == 0xFF01 || cp == 0xFF0C || cp == 0xFF1A || cp == 0xFF1B ||
      cp == 0xFF1F || cp == 0xFF0E)
    return true;
  return false;
}

bool is_word_char(char32_t cp) {
  if (is_ascii_alnum(cp)) return true;
  if (cp < 0x80) return false;
  if (is_nonword_unicode(cp)) return false;
  return cp >= 0xC0;  // accented letters and other scripts
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Removes heading markers, list bullets, and block-quote markers from the
// start of a line; table pipes are blanked everywhere.
std::string strip_markdown_line(std::string_view line) {
  size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  // block quote markers, possibly nested
  while (i < line.size() && line[i] == '>') {
    ++i;
    if (i < line.size() && line[i] == ' ') ++i;
  }
  // heading marker
  size_t h = i;
  while (h < line.size() && line[h] == '#') ++h;
  if (h > i && h - i <= 6 && h < line.size() && line[h] == ' ') i = h + 1;
  // list bullet
  if (i < line.size() && (line[i] == '-' || line[i] == '*' || line[i] == '+') &&
      i + 1 < line.size() && line[i + 1] == ' ') {
    i += 2;
  } else {
    size_t d = i;
    while (d < line.size() && std::isdigit(static_cast<unsigned char>(line[d])))
      ++d;
    if (d > i && d < line.size() && (line[d] == '.' || line[d] == ')') &&
        d + 1 < line.size() && line[d + 1] == ' ')
      i = d + 2;
  }
  std::string out(line.substr(i));
  for (char& c : out)
    if (c == '|') c = ' ';
  return out;
}

}  // namespace

long long count_words(std::string_view text) {
  long long words = 0;
  for (std::string_view raw_line : split_lines(text)) {
    const std::string line = strip_markdown_line(raw_line);
    size_t i = 0;
    bool token_has_word_char = false;
    auto flush = [&] {
      if (token_has_word_char) ++words;
      token_has_word_char = false;
    };
    while (i < line.size()) {
      const char32_t cp = utf8::decode(line, i);
      if (cp == ' ' || cp == '\t' || cp == '\r' || cp == 0x3000) {
        flush();
      } else if (utf8::is_han(cp)) {
        flush();
        ++words;  // each Han character is its own word
      } else if (is_word_char(cp)) {
        token_has_word_char = true;
      }
    }
    flush();
  }
  return words;
}

long long count_sentences(std::string_view text) {
  long long sentences = 0;
  bool segment_has_content = false;
  size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = utf8::decode(text, i);
    const bool terminator = cp == '.' || cp == '!' || cp == '?' ||
                            cp == 0x3002 || cp == 0xFF01 || cp == 0xFF1F;
    if (terminator) {
      if (segment_has_content) ++sentences;
      segment_has_content = false;
    } else if (is_ascii_alnum(cp) || utf8::is_han(cp) ||
               (cp >= 0xC0 && !is_nonword_unicode(cp))) {
      segment_has_content = true;
    }
  }
  if (segment_has_content) ++sentences;
  return sentences;
}

long long count_paragraphs(std::string_view text) {
  long long paragraphs = 0;
  bool in_paragraph = false;
  for (std::string_view line : split_lines(text)) {
    if (is_blank(line)) {
      in_paragraph = false;
    } else if (!in_paragraph) {
      ++paragraphs;
      in_paragraph = true;
    }
  }
  return paragraphs;
}

TextStats text_stats(std::string_view text) {
  return TextStats{count_words(text), count_sentences(text),
                   count_paragraphs(text)};
}

namespace {

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool equals_at(std::string_view text, size_t pos, std::string_view phrase,
               bool case_sensitive) {
  if (pos + phrase.size() > text.size()) return false;
  for (size_t k = 0; k < phrase.size(); ++k) {
    const char a = text[pos + k];
    const char b = phrase[k];
    if (case_sensitive ? a != b : ascii_lower(a) != ascii_lower(b))
      return false;
  }
  return true;
}

bool is_boundary_byte(char c) {
  return !std::isalnum(static_cast<unsigned char>(c));
}

}  // namespace

long long count_occurrences(std::string_view text, std::string_view phrase,
                            bool word_boundary, bool case_sensitive) {
  if (phrase.empty()) return 0;
  long long n = 0;
  size_t pos = 0;
  while (pos + phrase.size() <= text.size()) {
    if (equals_at(text, pos, phrase, case_sensitive)) {
      const bool left_ok =
          !word_boundary || pos == 0 || is_boundary_byte(text[pos - 1]);
      const size_t end = pos + phrase.size();
      const bool right_ok =
          !word_boundary || end == text.size() || is_boundary_byte(text[end]);
      if (left_ok && right_ok) {
        ++n;
        pos = end;
        continue;
      }
    }
    ++pos;
  }
  return n;
}

}  // namespace ifkit
