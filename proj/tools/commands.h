// Copyright 2026 The TwinOpt Authors.
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
#ifndef TWINOPT_TOOLS_COMMANDS_H_
#define TWINOPT_TOOLS_COMMANDS_H_

#include <functional>
#include <utility>
#include <vector>

#include "CLI11.hpp"

namespace twinopt::cli {

// A parsed subcommand and the action that runs it, returning an exit code.
using Action = std::function<int()>;
using Actions = std::vector<std::pair<CLI::App*, Action>>;

void register_generate(CLI::App& app, Actions& actions);
void register_run(CLI::App& app, Actions& actions);
void register_sweep(CLI::App& app, Actions& actions);
void register_certify(CLI::App& app, Actions& actions);

// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace twinopt::cli

#endif  // TWINOPT_TOOLS_COMMANDS_H_
