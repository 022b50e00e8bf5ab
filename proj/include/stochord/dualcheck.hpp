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

#ifndef STOCHORD_DUALCHECK_HPP_
#define STOCHORD_DUALCHECK_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stochord {

// Sampling plan for the randomized equivalence runs. Instances deliberately
// include ties: duplicate atom locations across the two laws and identical
// or shifted copies, so plateau and crossing-interval paths get exercised.
struct InstanceSpec {
  std::uint64_t seed = 1;
  int n_atoms_max = 10;
  int n_knots_max = 5;
  std::pair<double, double> value_range = {-5.0, 5.0};
  int trials = 1000;
};

struct ClauseOutcome {
  std::string clause;
  bool holds = false;
  double margin = 0.0;
};

struct Counterexample {
  int trial = 0;
  // True when some involved margin sits within twice the decision tolerance
  // of zero: the disagreement is float noise at the boundary, not logic.
  bool tolerance_marginal = false;
  std::string instance;
  std::vector<ClauseOutcome> clauses;
};

// Aggregate outcome of a suite. agreements counts trials where every clause
// returned the same verdict; tolerance-marginal disagreements are tallied
// separately and excluded from hard failures but still logged below.
struct EquivalenceReport {
  std::string theorem;
  int trials = 0;
  int agreements = 0;
  int tolerance_marginal = 0;
  std::vector<Counterexample> counterexamples;
  int hard_failures() const {
    return trials - agreements - tolerance_marginal;
  }
};

// Suite identifiers understood by the harness:
//   T1       all eight head-ordering clauses (plain and rank-transformed)
//   T1-star  the four rank-transformed head clauses only
//   T2       the five tail-ordering clauses
//   T3       the three double-ordering characterizations
//   L1       cumulative cdf-side vs quantile-side head criteria
//   L3       local crossing coupling (single self-test clause)
//   EQ1      second-order dominance vs cumulative quantile dominance
//   COR1     perception-distorted dominance: utility rays vs quantile side
//   COR2     utility-relative variant of COR1
//   MAJ      partial-sum relation vs uniform-law bridge vs the four
//            quantified statement families
const std::vector<std::string>& known_theorems();

// Runs `spec.trials` random instances through every clause of the named
// suite, each clause evaluated by its own finite procedure. Deterministic
// given the spec. Throws unknown_theorem and bad_params.
EquivalenceReport run_equivalence_suite(const InstanceSpec& spec,
                                        const std::string& theorem);

// Enumerates every ordered pair of uniform laws on n-vectors over the grid
// (the vectors themselves for MAJ) and evaluates the suite on each pair
// under the identity base functions. |grid|^n must stay within 10^4 and n
// within 4; scan_too_large otherwise.
EquivalenceReport exhaustive_small_scan(const std::string& theorem, int n,
                                        const std::vector<double>& grid);

}  // namespace stochord

#endif  // STOCHORD_DUALCHECK_HPP_
