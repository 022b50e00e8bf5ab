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

#ifndef STOCHORD_PIECEWISE_HPP_
#define STOCHORD_PIECEWISE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

namespace stochord {

// One-sided limits and interval endpoint conventions are carried by the data,
// never by call sites: a right-continuous integrator induces integration over
// (a,b], a left-continuous one over [a,b). Continuous functions satisfy both
// conventions, so either interval reading applies.
enum class Continuity { kLeft, kRight, kContinuous };
enum class Direction { kIncreasing, kDecreasing };

struct Knot {
  double x;
  double y;
};

// Monotone piecewise-linear function on the real line. Between consecutive
// knots the value is the linear interpolant; outside the knot span the
// function extends as a constant, so the measure it induces vanishes beyond
// the span and every integral against it is a finite sum.
class MonotonePL {
 public:
  explicit MonotonePL(std::vector<Knot> knots,
                      Continuity continuity = Continuity::kContinuous);

  double operator()(double x) const;
  // A piecewise-linear function is continuous; one-sided limits equal the
  // value. Exposed so code generic over step/linear parts can ask for them.
  double left_limit(double x) const { return (*this)(x); }
  double right_limit(double x) const { return (*this)(x); }

  double front_value() const { return knots_.front().y; }
  double back_value() const { return knots_.back().y; }
  double front_x() const { return knots_.front().x; }
  double back_x() const { return knots_.back().x; }

  const std::vector<Knot>& knots() const { return knots_; }
  Direction direction() const { return direction_; }
  Continuity continuity() const { return continuity_; }

  // y = a*x + b clipped to [lo, hi]; the usual way to build identity ramps.
  static MonotonePL linear(double lo, double hi, double a = 1.0,
                           double b = 0.0);
  static MonotonePL identity(double lo, double hi) { return linear(lo, hi); }
  static MonotonePL constant(double at_x, double value);

 private:
  std::vector<Knot> knots_;
  Direction direction_;
  Continuity continuity_;
};

struct JumpAtom {
  double x;
  double delta;  // nonzero; sign free, so differences of cdfs fit
};

// Pure-jump function of bounded variation: base value plus jumps at strictly
// increasing locations. The continuity tag fixes the function's value at a
// jump point (left tag: value excludes the local jump) and, when used as an
// integrator, which endpoint of an interval captures a boundary atom.
class StepFn {
 public:
  StepFn(double base, std::vector<JumpAtom> jumps, Continuity continuity);

  double operator()(double x) const;
  double left_limit(double x) const;
  double right_limit(double x) const;

  double base() const { return base_; }
  const std::vector<JumpAtom>& jumps() const { return jumps_; }
  Continuity continuity() const { return continuity_; }

 private:
  double base_;
  std::vector<JumpAtom> jumps_;
  Continuity continuity_;
};

// The evaluable/integrable universe: closed-form integration needs the
// integrand piecewise linear or piecewise constant, so arbitrary callables
// are rejected at the type level.
using Piecewise = std::variant<StepFn, MonotonePL>;

double value_at(const Piecewise& f, double x);
double left_limit_at(const Piecewise& f, double x);
double right_limit_at(const Piecewise& f, double x);
// Points where the function may change slope or jump, sorted ascending.
std::vector<double> breakpoints_of(const Piecewise& f);
Continuity continuity_of(const Piecewise& f);

// ---- Constructions used throughout the ordering machinery. ----

// x -> f(min(x, c)): follows f up to c, constant afterwards.
MonotonePL clamp_above(const MonotonePL& f, double c);
// x -> f(max(x, c)) - f(c): zero up to c, then follows f shifted down.
MonotonePL ramp_from(const MonotonePL& f, double c);
// x -> -f(-x): the reflection sending increasing to increasing.
MonotonePL reflect(const MonotonePL& f);
// a -> 1 - f(1 - a) for f on [0,1]: the complementary distortion.
MonotonePL complement_on_unit(const MonotonePL& f);
// x -> wa*a(x) + wb*b(x) on merged knots; throws if the result is not
// monotone (the weighted sum of same-direction functions always is).
MonotonePL linear_combination(double wa, const MonotonePL& a, double wb,
                              const MonotonePL& b);

}  // namespace stochord

#endif  // STOCHORD_PIECEWISE_HPP_
