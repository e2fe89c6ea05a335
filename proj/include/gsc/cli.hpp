/*
 * Copyright (c) 2026, The gscbench Authors
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

#ifndef GSC_CLI_HPP_
#define GSC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gsc {

/// Exit codes of the command line tool.
inline constexpr int kExitMember = 0;
inline constexpr int kExitNonMember = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariant = 3;

/// Runs the tool on `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsc

#endif  // GSC_CLI_HPP_
