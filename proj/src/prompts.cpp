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

#include "ifkit/prompts.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ifkit/error.hpp"

namespace ifkit {

std::string template_filename(TemplateName name) {
  switch (name) {
    case TemplateName::Expand: return "expand.txt";
    case TemplateName::Conflict: return "conflict.txt";
    case TemplateName::RewriteListing: return "rewrite_listing.txt";
    case TemplateName::RewriteIncorporation: return "rewrite_incorporation.txt";
  }
  return "?";
}

PromptTemplate load_template(const std::string& dir, TemplateName name) {
  const std::string path = dir + "/" + template_filename(name);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open template " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return PromptTemplate{name, buf.str()};
}

std::string render_template(const PromptTemplate& tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.body.size());
  const std::string& body = tmpl.body;
  size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '{') {
      size_t j = i + 1;
      while (j < body.size() &&
             (std::isalnum(static_cast<unsigned char>(body[j])) ||
              body[j] == '_'))
        ++j;
      if (j < body.size() && body[j] == '}' && j > i + 1) {
        const std::string key = body.substr(i + 1, j - i - 1);
        auto it = values.find(key);
        if (it == values.end()) throw UnknownPlaceholder(key);
        out += it->second;
        i = j + 1;
        continue;
      }
    }
    out.push_back(body[i]);
    ++i;
  }
  return out;
}

std::string new_constraint_list_block(Category category) {
  switch (category) {
    case Category::Content:
      return
          "Main Category : Content\n"
          "Subcategory : {\n"
          "    Keywords: Must include, Repeated, Avoid\n"
          "    Identifiers: Start identifier, End identifier, Delimiting identifier\n"
          "    Punctuation: Ending punctuation, Exclude punctuation\n"
          "}";
    case Category::Format:
      return
          "Main Category : Format\n"
          "Subcategory : {\n"
          "    Markdown: Heading levels, Block quotes\n"
          "    Json: Object nesting levels\n"
          "    XML: Number of attributes\n"
          "    Table: Row limit, Column limit\n"
          "}";
    case Category::Language:
      return
          "Main Category : Language\n"
          "Subcategory : {\n"
          "    Chinese: Simpfied, Traditional\n"
          "    English: All Uppercase, Capitalized, Lowercase\n"
          "}";
    case Category::Length:
      return
          "Main Category : Length\n"
          "Subcategory : {\n"
          "    Words: At most, At least, Range\n"
          "    Sentences: At most, At least, Range\n"
          "    Paragraphs: At most, At least, Range\n"
          "}";
  }
  return "";
}

CountWording count_wording(int count) {
  if (count == 1) {
    return CountWording{
        "one new constraint is",
        "a single (Primary category, secondary category, specific constraint) "
        "triplet",
        "one constraint"};
  }
  return CountWording{
      "two new constraints are",
      "two (Primary category, secondary category, specific constraint) "
      "triplets",
      "two constraints"};
}

std::string constraint_tuple_list(const std::vector<Constraint>& constraints) {
  std::string out;
  for (size_t i = 0; i < constraints.size(); ++i) {
    if (i > 0) out += ", ";
    const auto& c = constraints[i];
    out += "(" + to_string(c.category) + ", " + to_string(c.subcategory) +
           ", " + c.nl_text + ")";
  }
  return out;
}

std::string render_expand_prompt(const PromptTemplate& tmpl, Category category,
                                 int count,
                                 const std::vector<Constraint>& constraints,
                                 const std::string& question) {
  const CountWording cw = count_wording(count);
  return render_template(
      tmpl, {{"new_constrint_list", new_constraint_list_block(category)},
             {"c1", cw.c1},
             {"c2", cw.c2},
             {"c3", cw.c3},
             {"original_constraint_list", constraint_tuple_list(constraints)},
             {"original_question", question}});
}

std::string render_conflict_prompt(const PromptTemplate& tmpl,
                                   const std::vector<Constraint>& constraints,
                                   const std::string& question) {
  return render_template(tmpl,
                         {{"constraint_list", constraint_tuple_list(constraints)},
                          {"quetsion", question}});
}

std::string render_rewrite_prompt(const PromptTemplate& tmpl,
                                  const std::vector<Constraint>& constraints,
                                  const std::string& question) {
  return render_template(
      tmpl, {{"original_question", question},
             {"constraint_list",
              "[" + constraint_tuple_list(constraints) + "]"}});
}

}  // namespace ifkit
