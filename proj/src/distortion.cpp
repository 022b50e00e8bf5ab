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

#include "stochord/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "stochord/errors.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

MonotonePL retagged(const MonotonePL& f, Continuity tag) {
  return MonotonePL(f.knots(), tag);
}

bool strictly_rises(const MonotonePL& f) {
  return f.direction() == Direction::kIncreasing &&
         f.back_value() > f.front_value();
}

// Extreme generator values; monotone functions attain them at the ends.
std::pair<double, double> value_range_of(const Piecewise& g) {
  const double lo_end = left_limit_at(g, -std::numeric_limits<double>::infinity());
  const double hi_end = right_limit_at(g, std::numeric_limits<double>::infinity());
  return {std::min(lo_end, hi_end), std::max(lo_end, hi_end)};
}

bool is_nonincreasing(const Piecewise& g) {
  if (const StepFn* s = std::get_if<StepFn>(&g)) {
    for (const JumpAtom& j : s->jumps()) {
      if (j.delta > 0.0) return false;
    }
    return true;
  }
  const MonotonePL& p = std::get<MonotonePL>(g);
  return p.direction() == Direction::kDecreasing ||
         p.back_value() == p.front_value();
}

bool is_nondecreasing(const Piecewise& g) {
  if (const StepFn* s = std::get_if<StepFn>(&g)) {
    for (const JumpAtom& j : s->jumps()) {
      if (j.delta < 0.0) return false;
    }
    return true;
  }
  return std::get<MonotonePL>(g).direction() == Direction::kIncreasing;
}

ShapeVerdict check_slope_ratio(const MonotonePL& u, const MonotonePL& u0,
                               bool want_nonincreasing) {
  std::vector<double> xs;
  for (const Knot& k : u.knots()) xs.push_back(k.x);
  for (const Knot& k : u0.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const double eps = default_eps();
  bool have_prev = false;
  double prev_ratio = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double dx = xs[i + 1] - xs[i];
    const double su = (u(xs[i + 1]) - u(xs[i])) / dx;
    const double sb = (u0(xs[i + 1]) - u0(xs[i])) / dx;
    if (sb == 0.0) {
      if (su != 0.0) {
        throw Error(errc::degenerate_base,
                    "base is flat on a piece where the function varies");
      }
      continue;  // both flat: the piece carries no shape information
    }
    const double ratio = su / sb;
    if (have_prev) {
      const double slack =
          eps * std::max({1.0, std::abs(prev_ratio), std::abs(ratio)});
      const bool ok = want_nonincreasing ? ratio <= prev_ratio + slack
                                         : ratio >= prev_ratio - slack;
      if (!ok) return {false, xs[i]};
    }
    prev_ratio = ratio;
    have_prev = true;
  }
  return {true, std::nullopt};
}

}  // namespace

StandardPair make_standard_pair(MonotonePL u0, MonotonePL v0) {
  if (!strictly_rises(u0)) {
    throw Error(errc::not_increasing, "base utility must be increasing");
  }
  if (!strictly_rises(v0)) {
    throw Error(errc::not_increasing, "base distortion must be increasing");
  }
  const double eps = default_eps();
  if (std::abs(v0(0.0)) > eps || std::abs(v0(1.0) - 1.0) > eps) {
    throw Error(errc::bad_boundary,
                "base distortion must run from 0 at rank 0 to 1 at rank 1");
  }
  return {retagged(u0, Continuity::kLeft), retagged(v0, Continuity::kRight)};
}

StandardPair identity_pair(double lo, double hi) {
  return make_standard_pair(MonotonePL::identity(lo, hi),
                            MonotonePL::identity(0.0, 1.0));
}

StandardPair tilde_transform(const StandardPair& pair) {
  return make_standard_pair(reflect(pair.u0), complement_on_unit(pair.v0));
}

GeneratedUtility generate_utility(const MonotonePL& base,
                                  const Piecewise& generator,
                                  GeneratedKind kind) {
  if (kind == GeneratedKind::kConcave ? !is_nonincreasing(generator)
                                      : !is_nondecreasing(generator)) {
    throw Error(errc::wrong_monotonicity,
                kind == GeneratedKind::kConcave
                    ? "concave members need a non-increasing generator"
                    : "convex members need a non-decreasing generator");
  }
  const auto [gen_min, gen_max] = value_range_of(generator);
  if (!std::isfinite(gen_min) || !std::isfinite(gen_max)) {
    throw Error(errc::unbounded_generator, "generator must be bounded");
  }
  if (gen_min < 0.0 && gen_max > 0.0) {
    // A sign-changing generator integrates to a non-monotone function,
    // which cannot be represented in the monotone universe. Two-sided
    // families are handled by combining one-signed members instead.
    throw Error(errc::wrong_monotonicity,
                "generator must not change sign: the integral would not be "
                "monotone");
  }

  // Knots of the result: base knots plus generator breakpoints inside the
  // base span. The measure d(base) vanishes outside the span, so the
  // integral is constant there (0 below, final value above).
  std::vector<double> xs;
  for (const Knot& k : base.knots()) xs.push_back(k.x);
  for (double b : breakpoints_of(generator)) {
    if (b > base.front_x() && b < base.back_x()) xs.push_back(b);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Knot> out;
  double acc = 0.0;
  out.push_back({xs.front(), 0.0});
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double l = xs[i];
    const double r = xs[i + 1];
    const double base_slope = (base(r) - base(l)) / (r - l);
    const double gl = right_limit_at(generator, l);
    const double gr = left_limit_at(generator, r);
    if (gl == gr || base_slope == 0.0) {
      // Constant generator piece: the integral is linear, one chord exact.
      acc += base_slope * gl * (r - l);
      out.push_back({r, acc});
      continue;
    }
    // Linear generator piece: the integral is quadratic with second
    // derivative g' * base_slope. Chords subdivided so the sag
    // |g'*slope|*h^2/8 stays below 1e-10; knot values use the exact
    // antiderivative, so only interior points carry the chord error.
    const double gen_slope = (gr - gl) / (r - l);
    const double curvature = std::abs(gen_slope * base_slope);
    const double max_h = std::sqrt(8e-10 / curvature);
    const int pieces = std::min(
        65536, std::max(1, static_cast<int>(std::ceil((r - l) / max_h))));
    const double start = acc;
    for (int p = 1; p <= pieces; ++p) {
      const double t = (r - l) * p / pieces;
      const double value =
          start + base_slope * (gl * t + 0.5 * gen_slope * t * t);
      out.push_back({l + t, value});
    }
    acc = out.back().y;
    out.back().x = r;  // guard against accumulation noise in l + t
  }
  // Sub-knot spacing can collapse to equal doubles on very short pieces;
  // keep the later (segment-exact) value.
  std::vector<Knot> dedup;
  dedup.reserve(out.size());
  for (const Knot& k : out) {
    if (!dedup.empty() && dedup.back().x == k.x) {
      dedup.back().y = k.y;
    } else {
      dedup.push_back(k);
    }
  }
  MonotonePL realized(std::move(dedup));
  if (!std::isfinite(realized.back_value())) {
    throw Error(errc::unbounded_generator, "generated values overflowed");
  }
  return {base, generator, kind, std::move(realized)};
}

ShapeVerdict check_relative_concavity(const MonotonePL& u,
                                      const MonotonePL& u0) {
  return check_slope_ratio(u, u0, /*want_nonincreasing=*/true);
}

ShapeVerdict check_relative_convexity(const MonotonePL& u,
                                      const MonotonePL& u0) {
  return check_slope_ratio(u, u0, /*want_nonincreasing=*/false);
}

MonotonePL extreme_ray_family(const StandardPair& pair, RaySide side,
                              double cut) {
  if (side == RaySide::kVSide) {
    if (!(cut >= 0.0 && cut <= 1.0)) {
      throw Error(errc::cut_out_of_range,
                  "rank-side cuts must lie in [0, 1]");
    }
    return clamp_above(pair.v0, cut);
  }
  return clamp_above(pair.u0, cut);
}

}  // namespace stochord
