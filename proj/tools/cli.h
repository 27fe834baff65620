// Copyright 2026 The pampo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAMPO_TOOLS_CLI_H_
#define PAMPO_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pampo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 1;
inline constexpr int kPartialFailure = 2;

// Runs the command line `args` (without the program name). Results go to
// `out` unless --out redirects them; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace pampo::cli

#endif  // PAMPO_TOOLS_CLI_H_
