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

#include "stochord/tolerance.hpp"

#include <atomic>

namespace stochord {
namespace {
std::atomic<double> g_default_eps{1e-9};
}  // namespace

double default_eps() { return g_default_eps.load(std::memory_order_relaxed); }

void set_default_eps(double eps) {
  g_default_eps.store(eps, std::memory_order_relaxed);
}

}  // namespace stochord
