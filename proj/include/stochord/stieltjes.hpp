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

#ifndef STOCHORD_STIELTJES_HPP_
#define STOCHORD_STIELTJES_HPP_

#include <vector>

#include "stochord/discrete_cdf.hpp"
#include "stochord/piecewise.hpp"

namespace stochord {

struct IntegralResult {
  double value = 0.0;
  // Jump locations of the integrator that fell inside the interval under its
  // endpoint convention; empty for purely continuous integrators.
  std::vector<double> atoms_counted;
};

// Lebesgue-Stieltjes integral of `integrand` against the measure induced by
// `integrator` over the interval from a to b (either may be infinite). The
// integrator's continuity tag selects the endpoint convention: a
// right-continuous integrator integrates over (a,b], a left-continuous one
// over [a,b); continuous integrators induce no atoms, so both readings agree.
// All results are exact finite sums: jump terms use the integrand's tagged
// point values, linear pieces use exact trapezoids split at the integrand's
// breakpoints.
IntegralResult ls_integral(const Piecewise& integrand, const StepFn& integrator,
                           double a, double b);
IntegralResult ls_integral(const Piecewise& integrand,
                           const MonotonePL& integrator, double a, double b);
IntegralResult ls_integral(const Piecewise& integrand,
                           const Piecewise& integrator, double a, double b);
// Mixed integrator: pure-jump part plus continuous part, integrated
// separately and summed.
IntegralResult ls_integral(const Piecewise& integrand, const StepFn& jump_part,
                           const MonotonePL& continuous_part, double a,
                           double b);

// |Int_(a,b] U dV + Int_[a,b) V dU - (U(b)V(b) - V(a)U(a))| for U
// left-continuous (or continuous) and V right-continuous (or continuous);
// zero for exact summation-by-parts. Throws continuity_mismatch otherwise.
double integrate_by_parts_check(const Piecewise& u, const Piecewise& v,
                                double a, double b);

// The four substitution identities between real-line and rank-scale
// integrals for a monotone transform pair (u on the line, v on [0,1]) and a
// discrete cdf F. Each returns the worst absolute two-sided residual.
//   kLineToRank:        Int_R u d(v(F))       = Int_(0,1) u(F^{-1}) dv
//   kLineToRankPartial: Int_(-inf,a] u d(v(F)) = Int_(0,F(a)] u(F^{-1}) dv
//                        at every atom cut a
//   kRankToLine:        Int_R v(F) du          = Int_[0,1] v d(rank measure
//                        of u under F), boundary atoms included
//   kRankToLinePartial: Int_(0,p) v d(u(F^{-1})) = Int_(-inf,F^{-1}(p)) v(F) du
//                        at every attained level p
enum class CvIdentity { kLineToRank, kLineToRankPartial, kRankToLine,
                        kRankToLinePartial };
double change_of_variables_check(const MonotonePL& u, const MonotonePL& v,
                                 const DiscreteCdf& f, CvIdentity which);

// Residual of the rectangle identity coupling the two cumulative sides at a
// compatible corner (x1, alpha1) with F(x1-) <= alpha1 <= F(x1):
//   Int_{-inf}^{x1} v0(F) du0 + Int_0^{alpha1} u0(F^{-1}) dv0
//     = v0(F(x1)) u0(x1) + v0(alpha1) u0(F^{-1}(alpha1))
//       - v0(F(x1)) u0(F^{-1}(alpha1)).
// Throws not_a_compatible_pair when the corner condition fails.
double corner_identity_residual(const MonotonePL& u0, const MonotonePL& v0,
                                const DiscreteCdf& f, double x1, double alpha1);

// ---- Composite builders shared by the ordering machinery. ----

// F as a right-continuous step function with base 0 and jumps = masses.
StepFn step_of_cdf(const DiscreteCdf& f);
// 1 - F: right-continuous, base 1, negative jumps.
StepFn survivor_step(const DiscreteCdf& f);
// F^{-1} as a left-continuous step function on (0,1): base = lowest
// location, jumps at the interior cumulative levels.
StepFn step_of_quantile(const DiscreteCdf& f);
// g composed with a step function: jumps become g(after) - g(before).
StepFn compose(const MonotonePL& g, const StepFn& s);
// The measure of u(X)-increments on the rank scale [0,1]: atoms at interior
// cumulative levels plus the boundary atoms at 0 and 1 capturing the
// variation of u below the lowest and above the highest atom. Integrating a
// distortion v against this over the full line gives Int v d(u(F^{-1}))
// with the rank-scale endpoints accounted for.
StepFn rank_measure(const MonotonePL& u, const DiscreteCdf& f);
// Pointwise difference a - b of two step functions with a common tag.
StepFn step_difference(const StepFn& a, const StepFn& b);

}  // namespace stochord

#endif  // STOCHORD_STIELTJES_HPP_
