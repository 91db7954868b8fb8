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

#include <string_view>
#include <utility>
#include <vector>

namespace ifkit {

struct MarkdownStructure {
  std::vector<int> heading_levels;  // one entry per ATX heading, in order
  long long blockquote_count = 0;   // maximal runs of '>' lines
  std::vector<std::pair<long long, long long>> tables;  // (data rows, cols)
};

// ATX headings: 1..6 '#' at line start followed by a space. Block quotes:
// maximal runs of lines starting with '>'. Pipe tables: header row, separator
// row of dashes/colons, then data rows; rows excludes header and separator.
MarkdownStructure markdown_structure(std::string_view text);

// Maximum object-nesting depth of the largest well-formed JSON value found in
// the text (fenced code blocks first, then a brace scan). Arrays are
// transparent; 0 when no JSON value is present.
long long json_max_object_depth(std::string_view text);

struct XmlAttributeStats {
  long long total_attributes = 0;
  long long per_element_max = 0;
};

XmlAttributeStats xml_attribute_stats(std::string_view text);

}  // namespace ifkit
