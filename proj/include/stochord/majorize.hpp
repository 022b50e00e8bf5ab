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

#ifndef STOCHORD_MAJORIZE_HPP_
#define STOCHORD_MAJORIZE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "stochord/discrete_cdf.hpp"
#include "stochord/piecewise.hpp"

namespace stochord {

// Partial-sum relations between equal-length real vectors. The two weak
// variants accumulate opposite tails of the sorted arrangement; the strong
// relation adds the equal-totals condition and is exactly their conjunction.
enum class MajorKind {
  kStrong,     // largest-k sums of x dominate y's, totals agree
  kWeakLower,  // largest-k sums of x dominate y's, every k
  kWeakUpper,  // smallest-k sums of x are dominated by y's, every k
  kLog,        // kStrong applied to elementwise logarithms
};

struct MajorizationVerdict {
  bool holds = false;
  // 1-based index of the first violated partial-sum constraint; for kStrong
  // the index n flags the equal-totals condition. Empty when the relation
  // holds.
  std::optional<std::size_t> witness_k;
  // Smallest signed slack across all constraints; >= -eps exactly when the
  // relation holds.
  double margin = 0.0;
};

// Decides the partial-sum relation of the given kind between x and y.
// Throws length_mismatch for unequal lengths, bad_params for empty vectors,
// and non_positive_entry_for_log when kLog meets an entry <= 0.
MajorizationVerdict majorizes(const std::vector<double>& x,
                              const std::vector<double>& y, MajorKind kind);

// Truth values of the four classical single-(u, v) inequalities that, when
// quantified over all increasing concave u (resp. all decreasing weight
// sequences from v's rank increments), characterize the kWeakUpper relation.
// Each field evaluates one inequality for the supplied u, v and seed K.
struct MajorizationStatements {
  // Full-span integral of the cdf gap against u, written as a rank-weighted
  // sum of utility increments closed at the common top entry.
  bool cdf_gap_integral = false;
  // Inner products of the decreasing weights v(i/n) - v((i-1)/n) with the
  // ascending-sorted entries.
  bool weighted_entry_sums = false;
  // Plain utility totals, no sorting involved.
  bool utility_totals = false;
  // Rank weights v(i/n) on consecutive spacings of the ascending arrangement,
  // closed by the gap from the top entry to the seed constant K. The truth
  // value does not depend on K (the seed cancels between the two sides).
  bool weighted_spacings = false;
};

MajorizationStatements majorization_statements(const std::vector<double>& x,
                                               const std::vector<double>& y,
                                               const MonotonePL& u,
                                               const MonotonePL& v, double K);

// Law of a uniform draw from the entries: mass 1/n at each value, duplicate
// locations merged.
DiscreteCdf as_uniform_cdf(const std::vector<double>& x);

}  // namespace stochord

#endif  // STOCHORD_MAJORIZE_HPP_
