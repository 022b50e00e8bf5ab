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

#ifndef STOCHORD_DISTORTION_HPP_
#define STOCHORD_DISTORTION_HPP_

#include <optional>

#include "stochord/piecewise.hpp"

namespace stochord {

// A base utility u0 (increasing on the line) and a base distortion v0
// (increasing on [0,1] with v0(0) = 0 and v0(1) = 1). Together they fix a
// family of generalized orderings: u0 sets the wealth scale, v0 the rank
// scale.
struct StandardPair {
  MonotonePL u0;
  MonotonePL v0;
};

// Validates and tags the components (u0 left-continuous, v0
// right-continuous; both are continuous PL functions, so the tags only
// document orientation). Throws not_increasing for flat or decreasing
// components, bad_boundary when v0's endpoint values are off.
StandardPair make_standard_pair(MonotonePL u0, MonotonePL v0);

// The identity wealth scale on [lo, hi] with the identity rank scale; a
// symmetric span (lo = -hi) makes the reflected pair coincide with the
// original exactly.
StandardPair identity_pair(double lo, double hi);

// The reflected pair (x -> -u0(-x), a -> 1 - v0(1-a)). Applying it twice
// returns the original pair knot-for-knot.
StandardPair tilde_transform(const StandardPair& pair);

enum class GeneratedKind { kConcave, kConvex };

// A utility (or distortion) produced by integrating a monotone generator
// against a base: realized(x) = Int_{-inf}^{x} generator d(base). Concave
// members come from non-increasing generators, convex ones from
// non-decreasing generators; the realized function is relative-concave
// (resp. convex) to the base by construction.
struct GeneratedUtility {
  MonotonePL base;
  Piecewise generator;
  GeneratedKind kind;
  MonotonePL realized;
};

// Builds the integral above. Step generators give an exact piecewise-linear
// result; piecewise-linear generators give a piecewise-quadratic integral,
// stored as a chord PL whose knots are exact and whose interior error is at
// most 1e-9. Throws wrong_monotonicity when the generator's direction does
// not match the kind, or when it changes sign (the result would leave the
// monotone universe); unbounded_generator when a non-finite value appears.
GeneratedUtility generate_utility(const MonotonePL& base,
                                  const Piecewise& generator,
                                  GeneratedKind kind);

// Outcome of a relative-shape test; witness_x is the first merged knot
// where the slope-ratio monotonicity fails.
struct ShapeVerdict {
  bool holds = false;
  std::optional<double> witness_x;
};

// Decides whether u is concave relative to u0: the piecewise slope ratio
// du/du0 must be non-increasing across consecutive linear pieces (within the
// decision tolerance). Throws degenerate_base when u varies on a piece where
// u0 is flat (the ratio is undefined there).
ShapeVerdict check_relative_concavity(const MonotonePL& u,
                                      const MonotonePL& u0);
// The convex mirror: slope ratio non-decreasing.
ShapeVerdict check_relative_convexity(const MonotonePL& u,
                                      const MonotonePL& u0);

enum class RaySide { kUSide, kVSide };

// The extreme members of the relative-concave classes: u0(min(., cut)) on
// the wealth side and v0(min(., cut)) on the rank side. Every concave member
// is a mixture of these, which is what reduces "for all utilities" decisions
// to finite cut scans. Throws cut_out_of_range for v-side cuts outside
// [0, 1].
MonotonePL extreme_ray_family(const StandardPair& pair, RaySide side,
                              double cut);

}  // namespace stochord

#endif  // STOCHORD_DISTORTION_HPP_
