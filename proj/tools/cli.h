// Copyright 2026 The netform Authors
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

#ifndef NETFORM_TOOLS_CLI_H_
#define NETFORM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace netform::cli {

// Process exit codes. Nothing else is ever returned.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kClosestOnly = 3;
inline constexpr int kUnstable = 4;
inline constexpr int kNotConverged = 5;

// Runs one command. args excludes the program name. Results that are not
// written to a file go to `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace netform::cli

#endif  // NETFORM_TOOLS_CLI_H_
