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

#include <string>
#include <string_view>

namespace ifkit {

struct TextStats {
  long long words = 0;
  long long sentences = 0;
  long long paragraphs = 0;
};

// Word counting rules:
//  - Markdown heading markers, list bullets, block-quote markers, and table
//    pipes are stripped before tokenizing.
//  - A whitespace-delimited token counts as a word when it contains at least
//    one letter or digit.
//  - Each Han character counts as one word of its own.
long long count_words(std::string_view text);

// Maximal segments terminated by . ! ? or their fullwidth forms, or by end of
// text with residual letters/digits. Runs of terminators collapse to one
// boundary.
long long count_sentences(std::string_view text);

// Maximal runs of non-blank lines separated by one or more blank lines.
long long count_paragraphs(std::string_view text);

TextStats text_stats(std::string_view text);

// Non-overlapping left-to-right occurrences of phrase in text. WordBoundary
// requires the match to not touch adjacent letters/digits.
long long count_occurrences(std::string_view text, std::string_view phrase,
                            bool word_boundary, bool case_sensitive);

}  // namespace ifkit
