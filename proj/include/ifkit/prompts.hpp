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

#include <map>
#include <string>
#include <vector>

#include "ifkit/constraint.hpp"

namespace ifkit {

enum class TemplateName { Expand, Conflict, RewriteListing, RewriteIncorporation };

struct PromptTemplate {
  TemplateName name = TemplateName::Expand;
  std::string body;  // verbatim resource text with {placeholder} sites
};

// Resource file names under the template directory. The placeholder
// spellings inside the files ({quetsion}, {new_constrint_list}) are kept as
// shipped, so substitution keys must match them exactly.
std::string template_filename(TemplateName name);

PromptTemplate load_template(const std::string& dir, TemplateName name);

// Replaces every {key} site with its value. Throws UnknownPlaceholder when
// the body contains a {token} with no supplied value.
std::string render_template(const PromptTemplate& tmpl,
                            const std::map<std::string, std::string>& values);

// The per-category constraint menu block inserted at {new_constrint_list}.
std::string new_constraint_list_block(Category category);

// Rows of the count-wording table for the expansion prompt.
struct CountWording {
  std::string c1;
  std::string c2;
  std::string c3;
};
CountWording count_wording(int count);  // count must be 1 or 2

// "(Category, Subcategory, nl_text)" tuples joined by ", ".
std::string constraint_tuple_list(const std::vector<Constraint>& constraints);

std::string render_expand_prompt(const PromptTemplate& tmpl, Category category,
                                 int count,
                                 const std::vector<Constraint>& constraints,
                                 const std::string& question);

std::string render_conflict_prompt(const PromptTemplate& tmpl,
                                   const std::vector<Constraint>& constraints,
                                   const std::string& question);

std::string render_rewrite_prompt(const PromptTemplate& tmpl,
                                  const std::vector<Constraint>& constraints,
                                  const std::string& question);

}  // namespace ifkit
