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

#include "vbc/environment.hpp"

#include <cmath>
#include <stdexcept>

namespace vbc
{
void EnvironmentParams::validate() const
{
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("environment: rho must be positive");
  if (!(g > 0.0) || !std::isfinite(g))
    throw std::invalid_argument("environment: g must be positive");
  if (!(p_atm > 0.0) || !std::isfinite(p_atm))
    throw std::invalid_argument("environment: p_atm must be positive");
  if (!current.allFinite())
    throw std::invalid_argument("environment: current must be finite");
  if (!(depth_max > 0.0) || !std::isfinite(depth_max))
    throw std::invalid_argument("environment: depth_max must be positive");
}
}  // namespace vbc
