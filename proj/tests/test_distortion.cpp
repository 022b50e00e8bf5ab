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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "stochord/errors.hpp"
#include "stochord/piecewise.hpp"

namespace {

using stochord::Continuity;
using stochord::Error;
using stochord::errc;
using stochord::GeneratedKind;
using stochord::GeneratedUtility;
using stochord::MonotonePL;
using stochord::Piecewise;
using stochord::RaySide;
using stochord::StandardPair;
using stochord::StepFn;

MonotonePL unit_square() {
  return MonotonePL({{0.0, 0.0}, {0.5, 0.25}, {1.0, 1.0}});
}

TEST_CASE("standard pair validation") {
  CHECK_NOTHROW(stochord::identity_pair(-4.0, 4.0));
  CHECK_NOTHROW(stochord::make_standard_pair(MonotonePL::identity(-4.0, 4.0),
                                             unit_square()));
  // Half-slope distortion reaches only 0.5 at rank 1.
  try {
    stochord::make_standard_pair(MonotonePL::identity(-4.0, 4.0),
                                 MonotonePL::linear(0.0, 1.0, 0.5));
    FAIL("expected a boundary error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_boundary);
  }
  try {
    stochord::make_standard_pair(MonotonePL::constant(0.0, 1.0),
                                 MonotonePL::identity(0.0, 1.0));
    FAIL("expected a monotonicity error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_increasing);
  }
  CHECK_THROWS_AS(stochord::make_standard_pair(
                      MonotonePL({{0.0, 1.0}, {1.0, 0.0}}),
                      MonotonePL::identity(0.0, 1.0)),
                  Error);
}

TEST_CASE("standard pair carries the documented tags") {
  const StandardPair pair = stochord::identity_pair(-4.0, 4.0);
  CHECK(pair.u0.continuity() == Continuity::kLeft);
  CHECK(pair.v0.continuity() == Continuity::kRight);
}

TEST_CASE("reflected pair") {
  SUBCASE("identity pair on a symmetric span is a fixed point") {
    const StandardPair pair = stochord::identity_pair(-4.0, 4.0);
    const StandardPair t = stochord::tilde_transform(pair);
    REQUIRE(t.u0.knots().size() == pair.u0.knots().size());
    CHECK(t.u0.knots().front().x == -4.0);
    CHECK(t.u0.knots().back().y == 4.0);
    CHECK(t.v0(0.25) == 0.25);
  }
  SUBCASE("square distortion reflects to its complement") {
    const StandardPair pair = stochord::make_standard_pair(
        MonotonePL::identity(-4.0, 4.0), unit_square());
    const StandardPair t = stochord::tilde_transform(pair);
    CHECK(t.v0(0.0) == 0.0);
    CHECK(t.v0(0.5) == 0.75);  // 1 - square(0.5)
    CHECK(t.v0(1.0) == 1.0);
  }
  SUBCASE("applying it twice returns the original knot-for-knot") {
    const MonotonePL u0({{-1.0, -2.0}, {0.5, 0.0}, {3.0, 1.0}});
    const StandardPair pair = stochord::make_standard_pair(u0, unit_square());
    const StandardPair back =
        stochord::tilde_transform(stochord::tilde_transform(pair));
    REQUIRE(back.u0.knots().size() == u0.knots().size());
    for (std::size_t i = 0; i < u0.knots().size(); ++i) {
      CHECK(back.u0.knots()[i].x == u0.knots()[i].x);
      CHECK(back.u0.knots()[i].y == u0.knots()[i].y);
    }
    CHECK(back.v0(0.5) == 0.25);
  }
}

TEST_CASE("generated utilities from step generators are exact") {
  const MonotonePL base = MonotonePL::identity(0.0, 4.0);

  SUBCASE("indicator below a threshold integrates to a capped line") {
    // 1 on (-inf, 2), 0 after: value 1 - step down at 2.
    const Piecewise k = StepFn(1.0, {{2.0, -1.0}}, Continuity::kRight);
    const GeneratedUtility u =
        stochord::generate_utility(base, k, GeneratedKind::kConcave);
    CHECK(u.realized(0.0) == 0.0);
    CHECK(u.realized(1.0) == 1.0);
    CHECK(u.realized(2.0) == 2.0);
    CHECK(u.realized(3.5) == 2.0);  // capped: min(x, 2) shifted to 0 at 0
    const auto verdict = stochord::check_relative_concavity(u.realized, base);
    CHECK(verdict.holds);
  }

  SUBCASE("indicator above a threshold integrates to a hinge") {
    const Piecewise m = StepFn(0.0, {{2.0, 1.0}}, Continuity::kRight);
    const GeneratedUtility u =
        stochord::generate_utility(base, m, GeneratedKind::kConvex);
    CHECK(u.realized(1.0) == 0.0);
    CHECK(u.realized(2.0) == 0.0);
    CHECK(u.realized(3.0) == 1.0);  // max(0, x - 2)
    CHECK(u.realized(4.0) == 2.0);
    CHECK(stochord::check_relative_convexity(u.realized, base).holds);
  }

  SUBCASE("direction mismatches are rejected") {
    const Piecewise rising = StepFn(0.0, {{2.0, 1.0}}, Continuity::kRight);
    try {
      stochord::generate_utility(base, rising, GeneratedKind::kConcave);
      FAIL("expected a monotonicity error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::wrong_monotonicity);
    }
    const Piecewise falling = StepFn(1.0, {{2.0, -1.0}}, Continuity::kRight);
    CHECK_THROWS_AS(
        stochord::generate_utility(base, falling, GeneratedKind::kConvex),
        Error);
  }

  SUBCASE("sign-changing generators are rejected") {
    // Non-increasing but running from +1 to -1: the integral would rise
    // then fall, leaving the monotone universe.
    const Piecewise tent = StepFn(1.0, {{2.0, -2.0}}, Continuity::kRight);
    try {
      stochord::generate_utility(base, tent, GeneratedKind::kConcave);
      FAIL("expected a monotonicity error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::wrong_monotonicity);
    }
  }

  SUBCASE("non-positive generators yield decreasing members") {
    const Piecewise neg = StepFn(-1.0, {{2.0, -1.0}}, Continuity::kRight);
    const GeneratedUtility u =
        stochord::generate_utility(base, neg, GeneratedKind::kConcave);
    CHECK(u.realized(2.0) == -2.0);
    CHECK(u.realized(4.0) == -6.0);
  }
}

TEST_CASE("generated utility from a linear generator matches the closed form") {
  // k(s) = max(0, 1 - s) on [0, 1], concave kind: the integral over the
  // identity base is s - s^2/2 up to 1, constant 1/2 after.
  const MonotonePL base = MonotonePL::identity(0.0, 4.0);
  const Piecewise k = MonotonePL({{0.0, 1.0}, {1.0, 0.0}});
  const GeneratedUtility u =
      stochord::generate_utility(base, k, GeneratedKind::kConcave);
  CHECK(u.realized(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u.realized(4.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (double x : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CAPTURE(x);
    CHECK(std::abs(u.realized(x) - (x - 0.5 * x * x)) <= 1e-9);
  }
  CHECK(stochord::check_relative_concavity(u.realized, base).holds);
}

TEST_CASE("generation is linear in the generator") {
  const MonotonePL base = MonotonePL::identity(0.0, 4.0);
  const Piecewise k1 = StepFn(1.0, {{1.0, -1.0}}, Continuity::kRight);
  const Piecewise k2 = StepFn(1.0, {{3.0, -1.0}}, Continuity::kRight);
  const Piecewise combined =
      StepFn(5.0, {{1.0, -2.0}, {3.0, -3.0}}, Continuity::kRight);
  const MonotonePL u1 =
      stochord::generate_utility(base, k1, GeneratedKind::kConcave).realized;
  const MonotonePL u2 =
      stochord::generate_utility(base, k2, GeneratedKind::kConcave).realized;
  const MonotonePL sum =
      stochord::generate_utility(base, combined, GeneratedKind::kConcave)
          .realized;
  for (double x : {0.0, 0.5, 1.0, 2.0, 3.0, 3.7, 4.0}) {
    CAPTURE(x);
    CHECK(sum(x) ==
          doctest::Approx(2.0 * u1(x) + 3.0 * u2(x)).epsilon(1e-12));
  }
}

TEST_CASE("relative concavity by slope ratios") {
  const MonotonePL id = MonotonePL::identity(0.0, 4.0);
  const MonotonePL capped = stochord::clamp_above(id, 2.0);
  const MonotonePL hinge = stochord::ramp_from(id, 2.0);

  CHECK(stochord::check_relative_concavity(capped, id).holds);
  CHECK_FALSE(stochord::check_relative_convexity(capped, id).holds);

  const auto bad = stochord::check_relative_concavity(hinge, id);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness_x.has_value());
  CHECK(*bad.witness_x == 2.0);
  CHECK(stochord::check_relative_convexity(hinge, id).holds);

  // Flat base under a varying function has no defined slope ratio.
  try {
    stochord::check_relative_concavity(id, capped);
    FAIL("expected a degenerate-base error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_base);
  }

  // Every function is concave and convex relative to itself.
  CHECK(stochord::check_relative_concavity(capped, capped).holds);
  CHECK(stochord::check_relative_convexity(capped, capped).holds);
}

TEST_CASE("extreme rays") {
  const StandardPair pair = stochord::identity_pair(-4.0, 4.0);
  const MonotonePL u_ray =
      stochord::extreme_ray_family(pair, RaySide::kUSide, 2.0);
  CHECK(u_ray(1.0) == 1.0);
  CHECK(u_ray(3.0) == 2.0);  // min(x, 2)

  const MonotonePL v_ray =
      stochord::extreme_ray_family(pair, RaySide::kVSide, 0.5);
  CHECK(v_ray(0.25) == 0.25);
  CHECK(v_ray(0.75) == 0.5);  // min(a, 0.5)

  const StandardPair sq = stochord::make_standard_pair(
      MonotonePL::identity(-4.0, 4.0), unit_square());
  const MonotonePL sq_ray =
      stochord::extreme_ray_family(sq, RaySide::kVSide, 0.5);
  CHECK(sq_ray(0.25) == unit_square()(0.25));
  CHECK(sq_ray(0.9) == 0.25);  // min(square(a), 0.25)

  try {
    stochord::extreme_ray_family(pair, RaySide::kVSide, 1.5);
    FAIL("expected a cut-range error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::cut_out_of_range);
  }

  // Rays are base-concave at every cut.
  for (double c : {-4.0, -1.0, 0.0, 2.5, 4.0}) {
    CAPTURE(c);
    const MonotonePL ray =
        stochord::extreme_ray_family(pair, RaySide::kUSide, c);
    CHECK(stochord::check_relative_concavity(ray, pair.u0).holds);
  }
}

}  // namespace
