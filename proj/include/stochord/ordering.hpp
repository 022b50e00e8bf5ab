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

#ifndef STOCHORD_ORDERING_HPP_
#define STOCHORD_ORDERING_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stochord/discrete_cdf.hpp"
#include "stochord/distortion.hpp"

namespace stochord {

// Where a cumulative criterion is tightest: the cut c (a point on the line)
// or the level p (a point on [0,1]) together with the two cumulative values
// compared there.
struct OrderingWitness {
  double at = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Outcome of one ordering criterion. `statement` names the clause that was
// evaluated (e.g. "T1.i", "T2.reflected"). The witness is the minimizing scan
// point — carried also when the ordering holds, for diagnostics — and
// `margin` is the oriented slack there: margin >= -eps means the clause
// holds; a negative margin past -eps measures the worst violation.
struct OrderingVerdict {
  bool holds = false;
  std::string statement;
  std::optional<OrderingWitness> witness;
  double margin = 0.0;
};

enum class CrossDirection { kUp, kDown };

// Maximal interval on which the two cdfs agree (within eps), sandwiched
// between regions of opposite strict sign; lo == hi for a simple sign flip.
// probe_before / probe_after record F1 - F2 sampled just outside the
// interval (at lo - d and hi + d for d = half the smallest breakpoint gap).
struct CrossingInterval {
  double lo = 0.0;
  double hi = 0.0;
  CrossDirection direction = CrossDirection::kUp;
  double probe_before = 0.0;
  double probe_after = 0.0;
};

// Scans the merged breakpoints of F1 and F2 and returns the maximal
// sign-transition intervals of F1 - F2, in increasing order. "Up" means the
// difference passes from negative to positive. Identical cdfs give an empty
// list.
std::vector<CrossingInterval> find_crossings(const DiscreteCdf& f1,
                                             const DiscreteCdf& f2);

// Head cumulative criterion on the value line ("T1.i"): the distorted-cdf
// gap D(c) = Int_{-inf}^{c} [v0(F1) - v0(F2)] du0 must be >= -eps for every
// c; decided by evaluating D at each merged breakpoint of F1, F2 and u0 and
// at +inf. The witness carries the two one-sided integrals at the
// minimizing cut.
OrderingVerdict lemma1_cdf_side(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2);

// Head cumulative criterion on the rank scale ("T1.ii"): the quantile-
// utility gap E(p) = Int_{(0,p)} [u0(F1^{-1}) - u0(F2^{-1})] dv0 must be
// <= eps for every p in (0,1]; decided at each attained level of F1, F2,
// each knot of v0, and p = 1.
OrderingVerdict lemma1_quantile_side(const StandardPair& pair,
                                     const DiscreteCdf& f1,
                                     const DiscreteCdf& f2);

// The head ordering generated by the pair: every utility that is increasing
// and u0-concave weakly prefers F2 once v0 distorts the odds. Decided by the
// cut-family reduction through lemma1_cdf_side; statement "T1.i".
OrderingVerdict upper_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2);

// The tail ordering: every increasing u0-convex utility weakly prefers F2
// under the distortion. Decided by reflection — the head ordering of the
// reflected pair applied to the negated distributions in swapped order —
// with the witness mapped back to original coordinates; statement
// "T2.reflected".
OrderingVerdict lower_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2);

// Conjunction: head ordering of (F1, F2) and tail ordering of (F2, F1).
// Statement "T3" when it holds, otherwise "T3(<failing clause>)" with the
// failing side's witness.
OrderingVerdict double_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2);

// Named classical orderings, dispatched to the machinery above with the
// identity pair on a span covering both supports:
//   FSD          pointwise F1 >= F2 at every breakpoint
//   SSD          head cumulative cdf criterion
//   ICV          increasing-concave, via the clamp-ray family
//   ICX          increasing-convex, via the tail ordering
//   LORENZ_WEAK  cumulative quantile dominance (generalized Lorenz)
//   LORENZ_UPPER tail cumulative quantile dominance
// Throws unknown_name for anything else.
OrderingVerdict classic(std::string_view name, const DiscreteCdf& f1,
                        const DiscreteCdf& f2);

// ---- Individual clause evaluators. ----
// Each clause below decides the same head (or tail) ordering through a
// different finite reduction; the equivalence harness exercises them as
// independent code paths. All return the minimizing witness and margin.

// "T1.iii": for every cut c, Int u0(min(x,c)) d[v0(F1)] <= same against F2.
OrderingVerdict t1_utility_rays(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2);
// "T1.iv": for every level p, Int v0(min(a,p)) d(rank measure of u0 under
// F1) >= same under F2.
OrderingVerdict t1_rank_rays(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2);
// "T1.i*": for every cut c, Int v0 d(rank measure of the clamped utility
// u0(min(.,c)) under F1) >= same under F2.
OrderingVerdict t1_rank_image_rays(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2);
// "T1.ii*": for every level p, Int u0 d[v0(min(F1,p))] <= same against F2.
OrderingVerdict t1_distorted_cdf_rays(const StandardPair& pair,
                                      const DiscreteCdf& f1,
                                      const DiscreteCdf& f2);
// "T1.iii*": for every cut c, Int_{(0,1)} u0(min(F1^{-1},c)) dv0 <= same
// against F2.
OrderingVerdict t1_quantile_utility_rays(const StandardPair& pair,
                                         const DiscreteCdf& f1,
                                         const DiscreteCdf& f2);
// "T1.iv*": for every level p, Int v0(min(F1,p)) du0 >= same against F2.
OrderingVerdict t1_cdf_distortion_rays(const StandardPair& pair,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2);

// "T2.reflected": the construction route for the tail ordering (see
// lower_ordering).
OrderingVerdict t2_reflected(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2);
// "T2.i": tail distorted-cdf gap Int_{(c,inf)} [v0(F1) - v0(F2)] du0 >= -eps
// for every c, decided at merged breakpoints and -inf.
OrderingVerdict t2_tail_cdf_cumulative(const StandardPair& pair,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2);
// "T2.ii": tail quantile gap Int_{(q,1)} [u0(F1^{-1}) - u0(F2^{-1})] dv0
// <= eps for every q in [0,1).
OrderingVerdict t2_tail_quantile_cumulative(const StandardPair& pair,
                                            const DiscreteCdf& f1,
                                            const DiscreteCdf& f2);
// "T2.iii": for every cut c, Int [u0(max(x,c)) - u0(c)] d[v0(F1)] <= same
// against F2 (the direct evaluation over the convex ray family).
OrderingVerdict t2_ramp_rays(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2);
// "T2.iv": for every level q, Int [v0(max(a,q)) - v0(q)] d(rank measure of
// u0 under F1) >= same under F2.
OrderingVerdict t2_tail_rank_rays(const StandardPair& pair,
                                  const DiscreteCdf& f1,
                                  const DiscreteCdf& f2);

// "T3.two_sided": D(c) >= -eps and D(c) >= D(+inf) - eps for every c —
// the cumulative characterization of the double ordering.
OrderingVerdict t3_two_sided_cdf(const StandardPair& pair,
                                 const DiscreteCdf& f1, const DiscreteCdf& f2);
// "T3.rays": the clamp rays satisfy the head inequality and the ramp rays
// the reversed one — the signed-ray characterization of the double ordering.
OrderingVerdict t3_signed_rays(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2);

// Local coupling of the two cumulative sides at detected crossings: at each
// crossing interval where D(x0) >= -eps, the quantile-side gap must be
// <= eps on the level band the crossing pins down ([F2(lo-), F2(hi)] for an
// up-crossing, [F1(lo-), F1(hi)] for a down-crossing).
struct CrossingCouplingReport {
  int crossings = 0;
  int bands_checked = 0;  // crossings whose premise D(x0) >= -eps held
  bool implication_ok = true;
  // When implication_ok is false: the level and the two cumulative quantile
  // integrals that violated the band inequality.
  std::optional<OrderingWitness> counterexample;
};
CrossingCouplingReport crossing_coupling_check(const StandardPair& pair,
                                               const DiscreteCdf& f1,
                                               const DiscreteCdf& f2);

}  // namespace stochord

#endif  // STOCHORD_ORDERING_HPP_
