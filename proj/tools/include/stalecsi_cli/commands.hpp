// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "stalecsi_cli/config.hpp"
#include "stalecsi_cli/table.hpp"

#include <ostream>

namespace stalecsi::cli {

struct CommandResult {
    Table table;
    ExitCode status = ExitCode::ok;
};

CommandResult run_net_dof(const ExperimentConfig& cfg);
CommandResult run_simulate(const ExperimentConfig& cfg);
CommandResult run_regimes(const ExperimentConfig& cfg);
CommandResult run_design_table(const ExperimentConfig& cfg);
CommandResult run_verify(const ExperimentConfig& cfg);

CommandResult run_command(const ExperimentConfig& cfg);

// Renders in the configured format.
void emit(const ExperimentConfig& cfg, const CommandResult& result, std::ostream& os);

// "a-b" runs joined by commas, e.g. "2-5,9"; "none" when empty.
std::string format_runs(const std::vector<std::pair<long long, long long>>& runs);

} // namespace stalecsi::cli
