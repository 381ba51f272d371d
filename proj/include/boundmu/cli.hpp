/*
 * Copyright 2026 The boundmu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boundmu::cli {

/// Process exit codes.
enum Exit : int {
  kTrue = 0,
  kFalse = 1,
  kUndetermined = 2,
  kAborted = 3,
  kError = 10,
  kPositionCap = 11,
  kResourceCaps = 12,
  kCheckFailed = 13,
};

/// Runs the boundmu command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace boundmu::cli
