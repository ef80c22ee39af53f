// Copyright 2026 The Authors.
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

#pragma once

#include <string>
#include <vector>

namespace roughmat {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitViolation = 4;
inline constexpr int kExitCap = 5;

/// What one invocation produced. Identical argv yields byte-identical
/// output; all randomness is seeded through flags.
struct CommandResult {
  int exit_code = kExitOk;
  std::string output;       // stdout payload
  std::string diagnostics;  // stderr payload
};

/// Runs one subcommand. `argv` excludes the program name.
CommandResult execute_command(const std::vector<std::string>& argv);

/// main() adapter: executes and writes the streams.
int run_cli(int argc, char** argv);

}  // namespace roughmat
