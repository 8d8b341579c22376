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

#ifndef VBC_METRICS_IO_HPP_
#define VBC_METRICS_IO_HPP_

#include <string>

#include "vbc/mission.hpp"

namespace vbc
{
/// JSON round trip for mission metrics.  Readers throw std::runtime_error
/// on unreadable files or unexpected structure, naming the path.
std::string metrics_to_json(const MissionMetrics& metrics);
MissionMetrics metrics_from_json(const std::string& json_text);
void write_metrics_file(const std::string& path,
                        const MissionMetrics& metrics);
MissionMetrics read_metrics_file(const std::string& path);

/// Human-readable run summary: one line per segment plus the aggregates.
std::string summary_text(const MissionMetrics& metrics);
}  // namespace vbc

#endif  // VBC_METRICS_IO_HPP_
