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

#include "stochord/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "stochord/errors.hpp"

namespace stochord {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(errc::bad_params, std::string(what) + " is not finite");
  }
}

}  // namespace

MonotonePL::MonotonePL(std::vector<Knot> knots, Continuity continuity)
    : knots_(std::move(knots)), continuity_(continuity) {
  if (knots_.empty()) {
    throw Error(errc::empty_support, "MonotonePL needs at least one knot");
  }
  bool nondecreasing = true;
  bool nonincreasing = true;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    require_finite(knots_[i].x, "knot x");
    require_finite(knots_[i].y, "knot y");
    if (i > 0) {
      if (!(knots_[i - 1].x < knots_[i].x)) {
        throw Error(errc::not_increasing,
                    "MonotonePL knot x-values must be strictly increasing");
      }
      if (knots_[i].y < knots_[i - 1].y) nondecreasing = false;
      if (knots_[i].y > knots_[i - 1].y) nonincreasing = false;
    }
  }
  if (!nondecreasing && !nonincreasing) {
    throw Error(errc::not_monotone, "MonotonePL y-values must be monotone");
  }
  direction_ = nondecreasing ? Direction::kIncreasing : Direction::kDecreasing;
}

double MonotonePL::operator()(double x) const {
  if (x <= knots_.front().x) return knots_.front().y;
  if (x >= knots_.back().x) return knots_.back().y;
  auto it = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const Knot& k, double v) { return k.x < v; });
  if (it->x == x) return it->y;  // exact knot hit, no interpolation noise
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  double t = (x - lo.x) / (hi.x - lo.x);
  return lo.y + t * (hi.y - lo.y);
}

MonotonePL MonotonePL::linear(double lo, double hi, double a, double b) {
  if (!(lo < hi)) {
    throw Error(errc::bad_params, "linear ramp needs lo < hi");
  }
  return MonotonePL({{lo, a * lo + b}, {hi, a * hi + b}});
}

MonotonePL MonotonePL::constant(double at_x, double value) {
  return MonotonePL({{at_x, value}});
}

StepFn::StepFn(double base, std::vector<JumpAtom> jumps, Continuity continuity)
    : base_(base), jumps_(std::move(jumps)), continuity_(continuity) {
  if (continuity_ == Continuity::kContinuous) {
    throw Error(errc::continuity_mismatch,
                "StepFn must be tagged left- or right-continuous");
  }
  require_finite(base_, "step base");
  std::stable_sort(jumps_.begin(), jumps_.end(),
                   [](const JumpAtom& a, const JumpAtom& b) { return a.x < b.x; });
  // Merge exact location collisions, then drop exact-zero deltas.
  std::vector<JumpAtom> merged;
  merged.reserve(jumps_.size());
  for (const JumpAtom& j : jumps_) {
    require_finite(j.x, "jump location");
    require_finite(j.delta, "jump delta");
    if (!merged.empty() && merged.back().x == j.x) {
      merged.back().delta += j.delta;
    } else {
      merged.push_back(j);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const JumpAtom& j) { return j.delta == 0.0; }),
               merged.end());
  jumps_ = std::move(merged);
}

double StepFn::operator()(double x) const {
  return continuity_ == Continuity::kRight ? right_limit(x) : left_limit(x);
}

double StepFn::left_limit(double x) const {
  double v = base_;
  for (const JumpAtom& j : jumps_) {
    if (j.x < x) v += j.delta;
    else break;
  }
  return v;
}

double StepFn::right_limit(double x) const {
  double v = base_;
  for (const JumpAtom& j : jumps_) {
    if (j.x <= x) v += j.delta;
    else break;
  }
  return v;
}

double value_at(const Piecewise& f, double x) {
  return std::visit([x](const auto& g) { return g(x); }, f);
}

double left_limit_at(const Piecewise& f, double x) {
  return std::visit([x](const auto& g) { return g.left_limit(x); }, f);
}

double right_limit_at(const Piecewise& f, double x) {
  return std::visit([x](const auto& g) { return g.right_limit(x); }, f);
}

std::vector<double> breakpoints_of(const Piecewise& f) {
  std::vector<double> out;
  if (const StepFn* s = std::get_if<StepFn>(&f)) {
    out.reserve(s->jumps().size());
    for (const JumpAtom& j : s->jumps()) out.push_back(j.x);
  } else {
    const MonotonePL& p = std::get<MonotonePL>(f);
    out.reserve(p.knots().size());
    for (const Knot& k : p.knots()) out.push_back(k.x);
  }
  return out;
}

Continuity continuity_of(const Piecewise& f) {
  return std::visit([](const auto& g) { return g.continuity(); }, f);
}

MonotonePL clamp_above(const MonotonePL& f, double c) {
  if (!std::isfinite(c)) {
    if (c > 0) return f;  // min(x, +inf) is x
    return MonotonePL::constant(f.front_x(), f.front_value());
  }
  std::vector<Knot> ks;
  for (const Knot& k : f.knots()) {
    if (k.x < c) ks.push_back(k);
    else break;
  }
  ks.push_back({c, f(c)});
  return MonotonePL(std::move(ks), f.continuity());
}

MonotonePL ramp_from(const MonotonePL& f, double c) {
  if (!std::isfinite(c)) {
    if (c < 0) {
      // max(x, -inf) = x; subtract the constant lower extension.
      std::vector<Knot> ks;
      for (const Knot& k : f.knots()) ks.push_back({k.x, k.y - f.front_value()});
      return MonotonePL(std::move(ks), f.continuity());
    }
    return MonotonePL::constant(f.back_x(), 0.0);
  }
  double fc = f(c);
  std::vector<Knot> ks;
  ks.push_back({c, 0.0});
  for (const Knot& k : f.knots()) {
    if (k.x > c) ks.push_back({k.x, k.y - fc});
  }
  return MonotonePL(std::move(ks), f.continuity());
}

MonotonePL reflect(const MonotonePL& f) {
  std::vector<Knot> ks;
  ks.reserve(f.knots().size());
  for (auto it = f.knots().rbegin(); it != f.knots().rend(); ++it) {
    ks.push_back({-it->x, -it->y});
  }
  return MonotonePL(std::move(ks), f.continuity());
}

MonotonePL complement_on_unit(const MonotonePL& f) {
  std::vector<Knot> ks;
  ks.reserve(f.knots().size());
  for (auto it = f.knots().rbegin(); it != f.knots().rend(); ++it) {
    ks.push_back({1.0 - it->x, 1.0 - it->y});
  }
  return MonotonePL(std::move(ks), f.continuity());
}

MonotonePL linear_combination(double wa, const MonotonePL& a, double wb,
                              const MonotonePL& b) {
  std::vector<double> xs;
  for (const Knot& k : a.knots()) xs.push_back(k.x);
  for (const Knot& k : b.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Knot> ks;
  ks.reserve(xs.size());
  for (double x : xs) ks.push_back({x, wa * a(x) + wb * b(x)});
  return MonotonePL(std::move(ks));
}

}  // namespace stochord
