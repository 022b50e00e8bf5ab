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

#include "stochord/dualcheck.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "stochord/errors.hpp"

namespace stochord {
namespace {

bool same_report(const EquivalenceReport& a, const EquivalenceReport& b) {
  if (a.theorem != b.theorem || a.trials != b.trials ||
      a.agreements != b.agreements ||
      a.tolerance_marginal != b.tolerance_marginal ||
      a.counterexamples.size() != b.counterexamples.size())
    return false;
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    const Counterexample& ca = a.counterexamples[i];
    const Counterexample& cb = b.counterexamples[i];
    if (ca.trial != cb.trial ||
        ca.tolerance_marginal != cb.tolerance_marginal ||
        ca.instance != cb.instance || ca.clauses.size() != cb.clauses.size())
      return false;
    for (std::size_t j = 0; j < ca.clauses.size(); ++j) {
      if (ca.clauses[j].clause != cb.clauses[j].clause ||
          ca.clauses[j].holds != cb.clauses[j].holds ||
          ca.clauses[j].margin != cb.clauses[j].margin)
        return false;
    }
  }
  return true;
}

void check_clean(const EquivalenceReport& report, int expected_trials) {
  CAPTURE(report.theorem);
  CHECK(report.trials == expected_trials);
  CHECK(report.hard_failures() == 0);
  CHECK(report.agreements + report.tolerance_marginal == report.trials);
  const bool empty_iff_all_agree =
      report.counterexamples.empty() == (report.agreements == report.trials);
  CHECK(empty_iff_all_agree);
}

TEST_CASE("known suite identifiers") {
  const std::vector<std::string>& ids = known_theorems();
  CHECK(ids.size() == 10);
  CHECK(ids.front() == "T1");
  CHECK(ids.back() == "MAJ");
}

TEST_CASE("randomized suites agree clause-for-clause") {
  InstanceSpec spec;
  spec.seed = 7;
  spec.trials = 80;
  spec.n_atoms_max = 6;
  spec.n_knots_max = 4;
  spec.value_range = {-3.0, 3.0};
  for (const std::string& id : known_theorems()) {
    const EquivalenceReport report = run_equivalence_suite(spec, id);
    CHECK(report.theorem == id);
    check_clean(report, spec.trials);
  }
}

TEST_CASE("identical seeds reproduce the report exactly") {
  InstanceSpec spec;
  spec.seed = 99;
  spec.trials = 40;
  const EquivalenceReport a = run_equivalence_suite(spec, "T1");
  const EquivalenceReport b = run_equivalence_suite(spec, "T1");
  CHECK(same_report(a, b));

  const EquivalenceReport c = run_equivalence_suite(spec, "MAJ");
  const EquivalenceReport d = run_equivalence_suite(spec, "MAJ");
  CHECK(same_report(c, d));

  InstanceSpec other = spec;
  other.seed = 100;
  const EquivalenceReport e = run_equivalence_suite(other, "T1");
  CHECK(e.trials == a.trials);  // same plan, different draws
}

TEST_CASE("exhaustive small scans cover every ordered pair") {
  const std::vector<double> grid = {0.0, 1.0, 2.0};
  for (const std::string& id : known_theorems()) {
    const EquivalenceReport report = exhaustive_small_scan(id, 2, grid);
    CHECK(report.theorem == id);
    check_clean(report, 81);
  }
}

TEST_CASE("exhaustive scan guards") {
  const std::vector<double> eleven = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
  CHECK_THROWS_WITH_AS(exhaustive_small_scan("T1", 4, eleven),
                       doctest::Contains("10^4"), Error);
  try {
    exhaustive_small_scan("T1", 4, eleven);
  } catch (const Error& e) {
    CHECK(e.code() == errc::scan_too_large);
  }
  try {
    exhaustive_small_scan("T1", 5, {0.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == errc::scan_too_large);
  }
  try {
    exhaustive_small_scan("T1", 0, {0.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_params);
  }
  try {
    exhaustive_small_scan("T1", 2, {});
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_params);
  }
}

TEST_CASE("unknown suite id is rejected") {
  InstanceSpec spec;
  spec.trials = 1;
  try {
    run_equivalence_suite(spec, "T9");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_theorem);
  }
  try {
    exhaustive_small_scan("nope", 2, {0.0, 1.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_theorem);
  }
}

TEST_CASE("instance spec validation") {
  InstanceSpec spec;
  spec.trials = 0;
  try {
    run_equivalence_suite(spec, "T1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_params);
  }
  spec = InstanceSpec{};
  spec.n_knots_max = 1;
  try {
    run_equivalence_suite(spec, "T1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_params);
  }
  spec = InstanceSpec{};
  spec.value_range = {2.0, 2.0};
  try {
    run_equivalence_suite(spec, "T1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_params);
  }
}

TEST_CASE("single-atom degenerate scans still agree") {
  const EquivalenceReport t1 = exhaustive_small_scan("T1", 1, {0.0, 0.5, 1.0});
  check_clean(t1, 9);
  const EquivalenceReport t3 = exhaustive_small_scan("T3", 1, {0.0, 0.5, 1.0});
  check_clean(t3, 9);
}

}  // namespace
}  // namespace stochord
