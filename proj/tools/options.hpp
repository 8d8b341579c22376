// Copyright (c) 2026 The VBCsim Authors.
// All rights reserved.
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

#ifndef VBCSIM_TOOLS_OPTIONS_HPP_
#define VBCSIM_TOOLS_OPTIONS_HPP_

#include <CLI11.hpp>

#include "vbc/config.hpp"

namespace vbc
{
/// Registers every RunConfig field as a dotted option (--vehicle.*,
/// --environment.*, --controller.*, --sim.*, --mission.*, --output.*) so
/// the same names work on the command line and as INI sections.  Unknown
/// config-file keys are rejected.
void attach_options(CLI::App& app, RunConfig& cfg);
}  // namespace vbc

#endif  // VBCSIM_TOOLS_OPTIONS_HPP_
