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

namespace ifkit {

enum class HanScript { Simplified, Traditional, Mixed, None };

// Classification uses a bundled table of characters whose simplified and
// traditional forms differ; characters common to both scripts are neutral.
HanScript classify_han_script(std::string_view text);

// Table membership, exposed for the conflict rules and tests.
bool is_simplified_only(char32_t cp);
bool is_traditional_only(char32_t cp);

}  // namespace ifkit
