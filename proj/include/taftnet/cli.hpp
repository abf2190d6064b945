/*
   Copyright 2026 the taftnet authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TAFTNET_CLI_HPP
#define TAFTNET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace taftnet::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 2 validation/usage error, 3 oracle mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleMismatch = 3;

// Runs one subcommand. args excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taftnet::cli

#endif
