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
#include "commands.h"

#include <iostream>

#include "cli_common.h"
#include "twinopt/certify.h"
#include "twinopt/io.h"

namespace twinopt::cli {

int run_cli(int argc, char** argv) {
  CLI::App app{"Twin-greedy submodular maximization benchmarks", "twinopt"};
  app.require_subcommand(1);
  Actions actions;
  register_generate(app, actions);
  register_run(app, actions);
  register_sweep(app, actions);
  register_certify(app, actions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  for (auto& [sub, action] : actions) {
    if (!sub->parsed()) continue;
    try {
      return action();
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const ContractViolation& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitIo;
    } catch (const CertificationFailure& e) {
      std::cerr << "certification failed: " << e.what() << "\n";
      return kExitViolation;
    }
  }
  return kExitUsage;
}

}  // namespace twinopt::cli
