// Copyright 2026 The wl1 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WL1_TYPES_HPP_
#define WL1_TYPES_HPP_

#include <Eigen/Dense>

namespace wl1 {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Throws std::invalid_argument if v contains NaN or Inf; `name` labels the
// offending argument in the message.
void require_finite(const Vector& v, const char* name);

}  // namespace wl1

#endif  // WL1_TYPES_HPP_
