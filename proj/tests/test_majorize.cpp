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

#include "stochord/majorize.hpp"

#include <cstddef>
#include <vector>

#include "doctest.h"
#include "stochord/distortion.hpp"
#include "stochord/errors.hpp"
#include "stochord/ordering.hpp"

namespace {

using stochord::Error;
using stochord::errc;
using stochord::MajorKind;
using stochord::MajorizationStatements;
using stochord::MonotonePL;

using Vec = std::vector<double>;

// All vectors of the given length whose entries come from `values`.
std::vector<Vec> all_vectors(std::size_t length,
                             const std::vector<double>& values) {
  std::vector<Vec> out;
  out.push_back({});
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Vec> next;
    for (const Vec& prefix : out) {
      for (double v : values) {
        Vec grown = prefix;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  return out;
}

// min(t, c) on a span wide enough for entries in [-1, hi].
MonotonePL wealth_cut(double c, double hi) {
  return stochord::clamp_above(MonotonePL::identity(-1.0, hi), c);
}

// min(a, c) on the rank scale [0, 1].
MonotonePL rank_cut(double c) {
  if (c >= 1.0) return MonotonePL::identity(0.0, 1.0);
  return MonotonePL({{0.0, 0.0}, {c, c}, {1.0, c}});
}

// Rank weights 1, ..., 1, 0, ..., 0 (k ones out of n) realized through the
// increments of a concave ramp.
MonotonePL step_weight_ramp(std::size_t k, std::size_t n) {
  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  if (k >= n) return MonotonePL({{0.0, 0.0}, {1.0, nn}});
  return MonotonePL({{0.0, 0.0}, {kk / nn, kk}, {1.0, kk}});
}

TEST_CASE("partial-sum relations on frozen vectors") {
  SUBCASE("one concentrated entry dominates the even split") {
    const auto v = stochord::majorizes({1.0, 0.0, 0.0},
                                       {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                       MajorKind::kStrong);
    CHECK(v.holds);
    CHECK_FALSE(v.witness_k.has_value());
    const auto rev = stochord::majorizes({1.0 / 3, 1.0 / 3, 1.0 / 3},
                                         {1.0, 0.0, 0.0}, MajorKind::kStrong);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.witness_k.has_value());
    CHECK(*rev.witness_k == 1);
    CHECK(rev.margin == doctest::Approx(-2.0 / 3));
  }
  SUBCASE("smallest-tail sums decide the upper weak relation") {
    const auto v = stochord::majorizes({3.0, 1.0}, {3.0, 2.0},
                                       MajorKind::kWeakUpper);
    CHECK(v.holds);
    CHECK(v.margin == doctest::Approx(1.0));
    const auto rev = stochord::majorizes({3.0, 2.0}, {3.0, 1.0},
                                         MajorKind::kWeakUpper);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.witness_k.has_value());
    CHECK(*rev.witness_k == 1);
    CHECK(rev.margin == doctest::Approx(-1.0));
  }
  SUBCASE("largest-tail sums decide the lower weak relation") {
    CHECK(stochord::majorizes({3.0, 2.0}, {3.0, 1.0}, MajorKind::kWeakLower)
              .holds);
    const auto rev = stochord::majorizes({3.0, 1.0}, {3.0, 2.0},
                                         MajorKind::kWeakLower);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.witness_k.has_value());
    CHECK(*rev.witness_k == 2);
  }
  SUBCASE("reflexivity for every kind") {
    const Vec x = {2.5, 0.5, 7.0};
    CHECK(stochord::majorizes(x, x, MajorKind::kStrong).holds);
    CHECK(stochord::majorizes(x, x, MajorKind::kWeakUpper).holds);
    CHECK(stochord::majorizes(x, x, MajorKind::kWeakLower).holds);
    CHECK(stochord::majorizes(x, x, MajorKind::kLog).holds);
  }
  SUBCASE("log relation works on ratios") {
    CHECK(stochord::majorizes({4.0, 1.0}, {2.0, 2.0}, MajorKind::kLog).holds);
    const auto rev =
        stochord::majorizes({2.0, 2.0}, {4.0, 1.0}, MajorKind::kLog);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.witness_k.has_value());
    CHECK(*rev.witness_k == 1);
  }
  SUBCASE("permutation invariance") {
    const auto a = stochord::majorizes({1.0, 0.0, 0.0},
                                       {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                       MajorKind::kStrong);
    const auto b = stochord::majorizes({0.0, 1.0, 0.0},
                                       {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                       MajorKind::kStrong);
    CHECK(a.holds == b.holds);
    CHECK(a.margin == doctest::Approx(b.margin));
  }
}

TEST_CASE("input validation") {
  SUBCASE("lengths must match") {
    try {
      stochord::majorizes({1.0, 2.0}, {1.0}, MajorKind::kStrong);
      FAIL("expected a length error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::length_mismatch);
    }
  }
  SUBCASE("vectors must be non-empty") {
    try {
      stochord::majorizes({}, {}, MajorKind::kWeakUpper);
      FAIL("expected a parameter error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::bad_params);
    }
  }
  SUBCASE("log needs strictly positive entries") {
    try {
      stochord::majorizes({1.0, 0.0}, {0.5, 0.5}, MajorKind::kLog);
      FAIL("expected a positivity error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::non_positive_entry_for_log);
    }
    try {
      stochord::majorizes({1.0, 1.0}, {-0.5, 2.5}, MajorKind::kLog);
      FAIL("expected a positivity error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::non_positive_entry_for_log);
    }
  }
}

TEST_CASE("uniform law construction") {
  SUBCASE("distinct entries get equal masses") {
    const auto f = stochord::as_uniform_cdf({1.0, 3.0});
    REQUIRE(f.atoms().size() == 2);
    CHECK(f.atoms()[0].location == 1.0);
    CHECK(f.atoms()[0].mass == 0.5);
    CHECK(f.atoms()[1].location == 3.0);
    CHECK(f.atoms()[1].mass == 0.5);
  }
  SUBCASE("duplicates merge") {
    const auto f = stochord::as_uniform_cdf({2.0, 2.0});
    REQUIRE(f.atoms().size() == 1);
    CHECK(f.atoms()[0].location == 2.0);
    CHECK(f.atoms()[0].mass == 1.0);
  }
  SUBCASE("partial duplicates merge and stay sorted") {
    const auto f = stochord::as_uniform_cdf({0.0, 1.0, 1.0, 2.0});
    REQUIRE(f.atoms().size() == 3);
    CHECK(f.atoms()[0].mass == 0.25);
    CHECK(f.atoms()[1].mass == 0.5);
    CHECK(f.atoms()[2].mass == 0.25);
  }
  SUBCASE("empty input is rejected") {
    try {
      stochord::as_uniform_cdf({});
      FAIL("expected a parameter error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::bad_params);
    }
  }
}

TEST_CASE("strong relation decomposes into the two weak relations") {
  const std::vector<double> values = {0.0, 1.0, 2.0};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto vecs = all_vectors(n, values);
    for (const Vec& x : vecs) {
      for (const Vec& y : vecs) {
        const bool strong =
            stochord::majorizes(x, y, MajorKind::kStrong).holds;
        const bool both =
            stochord::majorizes(x, y, MajorKind::kWeakUpper).holds &&
            stochord::majorizes(x, y, MajorKind::kWeakLower).holds;
        CAPTURE(n);
        CHECK(strong == both);
      }
    }
  }
}

TEST_CASE("upper weak relation matches the distributional ordering") {
  const stochord::StandardPair pair = stochord::identity_pair(-1.0, 3.0);
  const std::vector<double> values = {0.0, 1.0, 2.0};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto vecs = all_vectors(n, values);
    for (const Vec& x : vecs) {
      for (const Vec& y : vecs) {
        const bool weak =
            stochord::majorizes(x, y, MajorKind::kWeakUpper).holds;
        const bool ordered =
            stochord::upper_ordering(pair, stochord::as_uniform_cdf(x),
                                     stochord::as_uniform_cdf(y))
                .holds;
        CAPTURE(n);
        CHECK(weak == ordered);
      }
    }
  }
}

TEST_CASE("single-function statements on the frozen example") {
  const Vec x = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const Vec y = {1.0, 0.0, 0.0};
  const MonotonePL u = wealth_cut(1.0, 2.0);
  const MonotonePL v = MonotonePL::identity(0.0, 1.0);
  const MajorizationStatements s =
      stochord::majorization_statements(x, y, u, v, 0.0);
  CHECK(s.cdf_gap_integral);
  CHECK(s.weighted_entry_sums);
  CHECK(s.utility_totals);
  CHECK(s.weighted_spacings);

  // A lower cut separates the vectors: the even split keeps all its mass
  // above 1/2 while the concentrated vector does not.
  const MajorizationStatements t =
      stochord::majorization_statements(x, y, wealth_cut(0.5, 2.0), v, 0.0);
  CHECK_FALSE(t.utility_totals);

  const MajorizationStatements same =
      stochord::majorization_statements(x, x, u, v, 0.0);
  CHECK(same.cdf_gap_integral);
  CHECK(same.weighted_entry_sums);
  CHECK(same.utility_totals);
  CHECK(same.weighted_spacings);
}

TEST_CASE("quantified statements match the partial-sum relation") {
  const std::vector<double> values = {0.0, 1.0, 2.0};
  const MonotonePL v_id = MonotonePL::identity(0.0, 1.0);
  const MonotonePL u_id = MonotonePL::identity(-1.0, 3.0);
  const std::vector<double> cuts = {0.0, 1.0, 2.0, 3.0};
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto vecs = all_vectors(n, values);
    for (const Vec& x : vecs) {
      for (const Vec& y : vecs) {
        const bool expected =
            stochord::majorizes(x, y, MajorKind::kWeakUpper).holds;
        bool all_cdf = true;
        bool all_weighted = true;
        bool all_utility = true;
        bool all_spacings = true;
        for (double c : cuts) {
          const MajorizationStatements s = stochord::majorization_statements(
              x, y, wealth_cut(c, 3.0), v_id, 0.0);
          all_cdf = all_cdf && s.cdf_gap_integral;
          all_utility = all_utility && s.utility_totals;
        }
        for (std::size_t k = 1; k <= n; ++k) {
          const MajorizationStatements s = stochord::majorization_statements(
              x, y, u_id, step_weight_ramp(k, n), 0.0);
          all_weighted = all_weighted && s.weighted_entry_sums;
          const MajorizationStatements r = stochord::majorization_statements(
              x, y, u_id, rank_cut(static_cast<double>(k) / n), 0.0);
          all_spacings = all_spacings && r.weighted_spacings;
        }
        CAPTURE(n);
        CAPTURE(expected);
        CHECK(all_cdf == expected);
        CHECK(all_weighted == expected);
        CHECK(all_utility == expected);
        CHECK(all_spacings == expected);
      }
    }
  }
}

TEST_CASE("spacing statement ignores the seed constant") {
  const MonotonePL u = wealth_cut(2.0, 5.0);
  const MonotonePL v = MonotonePL({{0.0, 0.0}, {0.25, 0.5}, {1.0, 1.0}});
  const std::vector<std::pair<Vec, Vec>> cases = {
      {{3.0, 1.0, 2.0}, {4.0, 0.0, 2.0}},
      {{1.0, 2.0}, {3.0, 0.0}},
      {{0.5, 0.5}, {0.25, 0.75}}};
  for (const auto& [x, y] : cases) {
    const MajorizationStatements base =
        stochord::majorization_statements(x, y, u, v, 0.0);
    for (double K : {1.0, -1.0, 100.0, -100.0}) {
      const MajorizationStatements s =
          stochord::majorization_statements(x, y, u, v, K);
      CHECK(s.cdf_gap_integral == base.cdf_gap_integral);
      CHECK(s.weighted_entry_sums == base.weighted_entry_sums);
      CHECK(s.utility_totals == base.utility_totals);
      CHECK(s.weighted_spacings == base.weighted_spacings);
    }
  }
}

}  // namespace
