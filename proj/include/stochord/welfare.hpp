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

#ifndef STOCHORD_WELFARE_HPP_
#define STOCHORD_WELFARE_HPP_

#include <string>
#include <utility>

#include "stochord/discrete_cdf.hpp"
#include "stochord/piecewise.hpp"

namespace stochord {

// A rank perception: strictly increasing continuous distortion on [0, 1]
// with endpoint values 0 and 1. The label travels with results so reports
// can name the evaluator.
struct Perception {
  MonotonePL f0;
  std::string label;
};

// Validates the boundary and monotonicity invariants; throws not_increasing
// or bad_boundary like the standard-pair constructor it mirrors.
Perception make_perception(MonotonePL f0, std::string label);

// The rank-neutral perception (identity on [0, 1]).
Perception identity_perception();

// Rank-dependent expected utility: the integral of u0 against the distorted
// cdf f0(F). Reduces to plain expected utility for the identity perception.
double rdeu(const MonotonePL& u0, const Perception& f0, const DiscreteCdf& f);

// The three algebraically equal expressions for the rank-weighted mean:
// wealth against the distorted cdf, the negated integral against the
// complementary distortion of the survivor function, and quantiles against
// the perception itself.
struct YaariForms {
  double cdf_form;
  double survivor_form;
  double quantile_form;
};
YaariForms yaari_forms(const Perception& f0, const DiscreteCdf& f);

// Rank-weighted mean. Computes both the cdf-side and quantile-side forms and
// throws internal_identity_violation when they disagree beyond tolerance —
// that would indicate an endpoint-convention bug, never a property of the
// input.
double yaari(const Perception& f0, const DiscreteCdf& f);

// Piecewise-linear surrogate of the power distortion p^rho on a uniform grid
// of grid_size knots; knot values are exact, endpoints included. Throws
// rho_out_of_range for rho <= 1 and bad_params for fewer than two knots.
Perception s_gini_perception(double rho, int grid_size = 1001);

// Derived scalar index: the rank-weighted mean under the rho = 2 power
// distortion divided by the plain mean, minus one. A convention of this
// library for nonnegative supports with positive mean (bad_params
// otherwise); equals the classical concentration index on simple examples.
double gini_index(const DiscreteCdf& f, int grid_size = 1001);

// Each check below decides two statements that the duality theory makes
// equivalent, through independent evaluation paths so the agreement is a
// real test rather than a tautology. first: comparisons of the f0-distorted
// cdfs over increasing concave utility rays; second: cumulative
// quantile-gap comparisons against f0.
std::pair<bool, bool> corollary1_check(const Perception& f0,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2);

// first: u0-concave utility rays against the f0-distorted cdfs; second: u0
// against rank-clamped distortions of the cdfs.
std::pair<bool, bool> corollary2_check(const MonotonePL& u0,
                                       const Perception& f0,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2);

}  // namespace stochord

#endif  // STOCHORD_WELFARE_HPP_
