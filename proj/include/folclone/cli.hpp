// Copyright 2026 The folclone Authors.
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

#ifndef FOLCLONE_CLI_HPP_
#define FOLCLONE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace folclone {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // reject, countermodel found, not an axiom
inline constexpr int kExitUsage = 2;     // bad flags or unreadable input

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace folclone

#endif  // FOLCLONE_CLI_HPP_
