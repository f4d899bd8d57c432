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

#ifndef WL1_IO_HPP_
#define WL1_IO_HPP_

#include <string>

#include "wl1/types.hpp"

namespace wl1 {

// Dense matrix as CSV, row-major, one row per line, full double precision
// (%.17g) so external tools see the exact entries.
void save_matrix_csv(const std::string& path, const Matrix& m);
Matrix load_matrix_csv(const std::string& path);

// Vectors as plain text, one value per line.
void save_vector_lines(const std::string& path, const Vector& v);
Vector load_vector_lines(const std::string& path);

}  // namespace wl1

#endif  // WL1_IO_HPP_
