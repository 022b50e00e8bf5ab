// Copyright 2026 The stochord Authors
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

#ifndef STOCHORD_TOLERANCE_HPP_
#define STOCHORD_TOLERANCE_HPP_

namespace stochord {

// Single process-wide comparison tolerance used by all ordering decisions.
// Integrals themselves are exact finite sums; the tolerance only enters when
// a computed margin is compared against zero. Set once at startup (the CLI
// honors the STOCHORD_EPS environment variable and the --eps flag).
double default_eps();
void set_default_eps(double eps);

// Mass-normalization slack for distribution construction. Deliberately much
// tighter than the decision tolerance and not user-configurable.
inline constexpr double kMassTol = 1e-12;

}  // namespace stochord

#endif  // STOCHORD_TOLERANCE_HPP_
