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

#ifndef VBC_CSV_LOG_HPP_
#define VBC_CSV_LOG_HPP_

#include <string>
#include <vector>

#include "vbc/mission.hpp"

namespace vbc
{
/// Column names of the per-tick CSV log, in file order.  Angles are in
/// radians, positions in meters, pressure in pascals; sat_* flags are 0/1.
const std::vector<std::string>& csv_columns();

/// Writes header plus one row per control tick.  Numeric formatting is
/// fixed so identical runs produce byte-identical files.
void write_csv(const std::string& path, const TickLog& log);

/// Reads a log written by write_csv.  Throws std::runtime_error naming the
/// path on I/O errors or a header/width mismatch.
TickLog read_csv(const std::string& path);
}  // namespace vbc

#endif  // VBC_CSV_LOG_HPP_
