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

#include <stdexcept>
#include <string>
#include <vector>

namespace ifkit {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyConstraintList : public Error {
 public:
  EmptyConstraintList() : Error("constraint list is empty") {}
};

class ElementCountOutOfRange : public Error {
 public:
  ElementCountOutOfRange(int categories, int count)
      : Error("element count " + std::to_string(count) +
              " outside [" + std::to_string(categories) + ", " +
              std::to_string(2 * categories) + "] for " +
              std::to_string(categories) + " categories"),
        categories(categories),
        count(count) {}
  int categories;
  int count;
};

class InvalidRange : public Error {
 public:
  InvalidRange(long long lo, long long hi)
      : Error("invalid range [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]"),
        lo(lo),
        hi(hi) {}
  long long lo;
  long long hi;
};

class EmptyPhrase : public Error {
 public:
  EmptyPhrase() : Error("constraint phrase is empty") {}
};

class CategoryMismatch : public Error {
 public:
  explicit CategoryMismatch(const std::string& detail)
      : Error("category mismatch: " + detail) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail, std::string raw = {})
      : Error("parse error: " + detail), raw(std::move(raw)) {}
  std::string raw;
};

class SpecExtractionError : public Error {
 public:
  explicit SpecExtractionError(const std::string& tuple)
      : Error("no structured spec extracted from: " + tuple) {}
};

class TransportError : public Error {
 public:
  explicit TransportError(const std::string& detail)
      : Error("transport error: " + detail) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& detail)
      : Error("format error: " + detail) {}
};

class CoverageError : public Error {
 public:
  CoverageError(const std::string& detail, std::vector<int> missing)
      : Error("coverage error: " + detail), missing(std::move(missing)) {}
  std::vector<int> missing;
};

class AllCategoriesCovered : public Error {
 public:
  AllCategoriesCovered() : Error("all constraint categories already covered") {}
};

class InsufficientExamples : public Error {
 public:
  InsufficientExamples(int needed, int found)
      : Error("example pool has " + std::to_string(found) +
              " matching pairs, need " + std::to_string(needed)),
        needed(needed),
        found(found) {}
  int needed;
  int found;
};

class UnknownPlaceholder : public Error {
 public:
  explicit UnknownPlaceholder(const std::string& name)
      : Error("unknown template placeholder: {" + name + "}") {}
};

class UnknownInstance : public Error {
 public:
  explicit UnknownInstance(const std::string& id)
      : Error("unknown instance id: " + id) {}
};

class EmptyRecordSet : public Error {
 public:
  EmptyRecordSet() : Error("no evaluation records") {}
};

class MissingOutputs : public Error {
 public:
  explicit MissingOutputs(std::vector<std::string> ids)
      : Error("missing outputs for " + std::to_string(ids.size()) +
              " instance id(s)"),
        ids(std::move(ids)) {}
  std::vector<std::string> ids;
};

class DecodeError : public Error {
 public:
  DecodeError(int line, const std::string& cause)
      : Error("line " + std::to_string(line) + ": " + cause), line(line) {}
  int line;
};

class InvariantError : public Error {
 public:
  InvariantError(int line, const std::string& cause)
      : Error("line " + std::to_string(line) + ": " + cause), line(line) {}
  int line;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& detail) : Error("io error: " + detail) {}
};

class MissingCredential : public Error {
 public:
  explicit MissingCredential(const std::string& env)
      : Error("credential environment variable not set: " + env) {}
};

class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& field)
      : Error("invalid config field: " + field), field(field) {}
  std::string field;
};

}  // namespace ifkit
