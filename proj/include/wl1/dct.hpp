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

#ifndef WL1_DCT_HPP_
#define WL1_DCT_HPP_

#include "wl1/types.hpp"

namespace wl1 {

// Orthonormal DCT-II / DCT-III pair. Both directions are isometries
// (||dct_forward(s)||_2 == ||s||_2) and exact inverses of each other, so
// Parseval holds without any extra scaling.

// Forward orthonormal DCT-II:
//   c_0 = sqrt(1/N) sum_j s_j
//   c_k = sqrt(2/N) sum_j s_j cos(pi (j + 1/2) k / N),  k >= 1
Vector dct_forward(const Vector& s);

// Inverse transform (orthonormal DCT-III). dct_inverse(dct_forward(s)) == s.
Vector dct_inverse(const Vector& c);

}  // namespace wl1

#endif  // WL1_DCT_HPP_
