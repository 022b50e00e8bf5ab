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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stochord/discrete_cdf.hpp"
#include "stochord/distortion.hpp"
#include "stochord/errors.hpp"
#include "stochord/majorize.hpp"
#include "stochord/ordering.hpp"
#include "stochord/tolerance.hpp"
#include "stochord/welfare.hpp"

namespace stochord {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- Deterministic sampling. ----

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

// Half-integer lattice snap; applied to roughly half of all draws so that
// duplicate locations, shared breakpoints and genuine plateaus are common
// rather than measure-zero events.
double snap_half(double x) { return std::round(x * 2.0) / 2.0; }

DiscreteCdf random_cdf(Sampler& rng, const InstanceSpec& spec) {
  const int n = rng.integer(1, spec.n_atoms_max);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double loc = rng.real(spec.value_range.first, spec.value_range.second);
    if (rng.coin()) loc = snap_half(loc);
    atoms.push_back({loc, rng.real(0.05, 1.0)});
  }
  return DiscreteCdf::from_atoms(std::move(atoms), /*normalize=*/true);
}

DiscreteCdf shifted_copy(const DiscreteCdf& f, double t) {
  std::vector<Atom> atoms = f.atoms();
  for (Atom& a : atoms) a.location += t;
  return DiscreteCdf::from_atoms(std::move(atoms));
}

MonotonePL random_u0(Sampler& rng, const InstanceSpec& spec) {
  const double lo = spec.value_range.first - 1.0;
  const double hi = spec.value_range.second + 1.0;
  const int pieces = rng.integer(1, std::max(1, spec.n_knots_max - 1));
  std::vector<double> xs{lo, hi};
  for (int i = 0; i + 1 < pieces; ++i) xs.push_back(rng.real(lo, hi));
  std::sort(xs.begin(), xs.end());
  std::vector<Knot> knots;
  double y = rng.real(lo - 1.0, lo);
  knots.push_back({xs.front(), y});
  for (std::size_t i = 1; i < xs.size(); ++i) {
    y += (xs[i] - xs[i - 1]) * rng.real(0.05, 1.5);
    knots.push_back({xs[i], y});
  }
  return MonotonePL(std::move(knots));
}

MonotonePL random_v0(Sampler& rng, const InstanceSpec& spec) {
  const int interior = rng.integer(0, std::max(0, spec.n_knots_max - 2));
  std::vector<double> xs, ys;
  for (int i = 0; i < interior; ++i) {
    xs.push_back(rng.real(0.0, 1.0));
    ys.push_back(rng.real(0.0, 1.0));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<Knot> knots{{0.0, 0.0}};
  for (int i = 0; i < interior; ++i) knots.push_back({xs[i], ys[i]});
  knots.push_back({1.0, 1.0});
  return MonotonePL(std::move(knots));
}

struct Instance {
  StandardPair pair;
  DiscreteCdf f1;
  DiscreteCdf f2;
};

Instance random_instance(Sampler& rng, const InstanceSpec& spec) {
  StandardPair pair =
      make_standard_pair(random_u0(rng, spec), random_v0(rng, spec));
  DiscreteCdf f1 = random_cdf(rng, spec);
  const int mode = rng.integer(0, 7);
  DiscreteCdf f2 = (mode == 0)   ? f1
                   : (mode == 1) ? shifted_copy(f1, snap_half(rng.real(-1.0, 1.0)))
                                 : random_cdf(rng, spec);
  return {std::move(pair), std::move(f1), std::move(f2)};
}

std::vector<double> random_vector(Sampler& rng, int n,
                                  const InstanceSpec& spec) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& e : x) {
    e = rng.real(spec.value_range.first, spec.value_range.second);
    if (rng.coin()) e = snap_half(e);
  }
  return x;
}

// ---- Instance serialization (full precision, deterministic). ----

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void append_pl(std::string& out, const char* name, const MonotonePL& f) {
  out += name;
  out += "=[";
  bool first = true;
  for (const Knot& k : f.knots()) {
    if (!first) out += ' ';
    first = false;
    out += '(';
    out += fmt(k.x);
    out += ',';
    out += fmt(k.y);
    out += ')';
  }
  out += ']';
}

void append_cdf(std::string& out, const char* name, const DiscreteCdf& f) {
  out += name;
  out += "=[";
  bool first = true;
  for (const Atom& a : f.atoms()) {
    if (!first) out += ' ';
    first = false;
    out += '(';
    out += fmt(a.location);
    out += ',';
    out += fmt(a.mass);
    out += ')';
  }
  out += ']';
}

void append_vector(std::string& out, const char* name,
                   const std::vector<double>& v) {
  out += name;
  out += "=[";
  bool first = true;
  for (double e : v) {
    if (!first) out += ' ';
    first = false;
    out += fmt(e);
  }
  out += ']';
}

std::string describe_instance(const Instance& inst) {
  std::string out;
  append_pl(out, "u0", inst.pair.u0);
  out += ' ';
  append_pl(out, "v0", inst.pair.v0);
  out += ' ';
  append_cdf(out, "F1", inst.f1);
  out += ' ';
  append_cdf(out, "F2", inst.f2);
  return out;
}

std::string describe_vectors(const std::vector<double>& x,
                             const std::vector<double>& y) {
  std::string out;
  append_vector(out, "x", x);
  out += ' ';
  append_vector(out, "y", y);
  return out;
}

// ---- Clause tables. ----

using OrderingClause = std::function<OrderingVerdict(
    const StandardPair&, const DiscreteCdf&, const DiscreteCdf&)>;

struct NamedOrdering {
  const char* name;
  OrderingClause fn;
};

std::vector<NamedOrdering> ordering_clauses(const std::string& theorem) {
  const NamedOrdering plain_head[] = {
      {"cumulative cdf side", lemma1_cdf_side},
      {"cumulative quantile side", lemma1_quantile_side},
      {"clamped utility rays", t1_utility_rays},
      {"rank rays", t1_rank_rays},
  };
  const NamedOrdering starred_head[] = {
      {"rank image rays", t1_rank_image_rays},
      {"distorted-cdf rays", t1_distorted_cdf_rays},
      {"quantile utility rays", t1_quantile_utility_rays},
      {"cdf distortion rays", t1_cdf_distortion_rays},
  };
  std::vector<NamedOrdering> out;
  if (theorem == "T1" || theorem == "L1") {
    out.assign(std::begin(plain_head), std::end(plain_head));
    if (theorem == "L1") out.resize(2);  // the two cumulative sides only
    if (theorem == "T1")
      out.insert(out.end(), std::begin(starred_head), std::end(starred_head));
  } else if (theorem == "T1-star") {
    out.assign(std::begin(starred_head), std::end(starred_head));
  } else if (theorem == "T2") {
    out = {{"reflected construction", t2_reflected},
           {"tail cdf cumulative", t2_tail_cdf_cumulative},
           {"tail quantile cumulative", t2_tail_quantile_cumulative},
           {"ramp rays", t2_ramp_rays},
           {"tail rank rays", t2_tail_rank_rays}};
  } else if (theorem == "T3") {
    out = {{"head and tail conjunction", double_ordering},
           {"two-sided cumulative", t3_two_sided_cdf},
           {"signed rays", t3_signed_rays}};
  } else if (theorem == "EQ1") {
    out = {{"second-order dominance",
            [](const StandardPair&, const DiscreteCdf& f1,
               const DiscreteCdf& f2) { return classic("SSD", f1, f2); }},
           {"cumulative quantile dominance",
            [](const StandardPair&, const DiscreteCdf& f1,
               const DiscreteCdf& f2) {
              return classic("LORENZ_WEAK", f1, f2);
            }}};
  }
  return out;
}

ClauseOutcome l3_outcome(const Instance& inst) {
  const CrossingCouplingReport rep =
      crossing_coupling_check(inst.pair, inst.f1, inst.f2);
  double margin = 1.0;  // placeholder far from the marginal band
  if (rep.counterexample)
    margin = rep.counterexample->rhs - rep.counterexample->lhs;
  return {"local crossing coupling", rep.implication_ok, margin};
}

std::vector<ClauseOutcome> corollary_outcomes(const std::string& theorem,
                                              const Instance& inst) {
  const Perception f0{inst.pair.v0, "sampled"};
  if (theorem == "COR1") {
    const std::pair<bool, bool> s = corollary1_check(f0, inst.f1, inst.f2);
    // Margins recomputed along the same two reductions; used only to decide
    // whether a disagreement sits in the tolerance-marginal band.
    const Support s1 = inst.f1.support();
    const Support s2 = inst.f2.support();
    const double lo = std::min(s1.min_loc, s2.min_loc) - 1.0;
    const double hi = std::max(s1.max_loc, s2.max_loc) + 1.0;
    const StandardPair pair =
        make_standard_pair(MonotonePL::identity(lo, hi), inst.pair.v0);
    const double m1 = t1_utility_rays(pair, inst.f1, inst.f2).margin;
    const double m2 = lemma1_quantile_side(pair, inst.f1, inst.f2).margin;
    return {{"distorted utility rays", s.first, m1},
            {"cumulative quantile side", s.second, m2}};
  }
  const std::pair<bool, bool> s =
      corollary2_check(inst.pair.u0, f0, inst.f1, inst.f2);
  const double m1 = t1_utility_rays(inst.pair, inst.f1, inst.f2).margin;
  const double m2 = t1_distorted_cdf_rays(inst.pair, inst.f1, inst.f2).margin;
  return {{"distorted utility rays", s.first, m1},
          {"rank-clamped distorted cdfs", s.second, m2}};
}

// ---- The six independent deciders of the kWeakUpper relation. ----

MonotonePL wealth_cut(double lo, double hi, double c) {
  return clamp_above(MonotonePL::identity(lo, hi), c);
}

// Distortion whose rank increments v(i/n) - v((i-1)/n) are one for i <= k and
// zero afterwards: the 0/1 extreme ray of decreasing weight sequences.
MonotonePL step_weight(std::size_t k, std::size_t n) {
  const double p = static_cast<double>(k) / static_cast<double>(n);
  const double level = static_cast<double>(k);
  if (k >= n) return MonotonePL::linear(0.0, 1.0, static_cast<double>(n), 0.0);
  return MonotonePL({{0.0, 0.0}, {p, level}, {1.0, level}});
}

// a -> min(a, c) on [0, 1]: the rank-side cut family.
MonotonePL rank_cut(double c) {
  if (c >= 1.0) return MonotonePL::identity(0.0, 1.0);
  return MonotonePL({{0.0, 0.0}, {c, c}, {1.0, c}});
}

std::vector<ClauseOutcome> maj_outcomes(const std::vector<double>& x,
                                        const std::vector<double>& y) {
  std::vector<ClauseOutcome> out;
  const MajorizationVerdict direct = majorizes(x, y, MajorKind::kWeakUpper);
  out.push_back({"ascending partial sums", direct.holds, direct.margin});

  double lo = kInf;
  double hi = -kInf;
  for (double e : x) lo = std::min(lo, e), hi = std::max(hi, e);
  for (double e : y) lo = std::min(lo, e), hi = std::max(hi, e);
  const StandardPair pair = identity_pair(lo - 1.0, hi + 1.0);
  const OrderingVerdict bridge =
      upper_ordering(pair, as_uniform_cdf(x), as_uniform_cdf(y));
  out.push_back({"uniform-law head ordering", bridge.holds, bridge.margin});

  // The four quantified statement families over their complete cut grids:
  // wealth cuts at merged entries plus one beyond the top (the gap integral
  // is piecewise linear in the cut, so these are the only candidate minima),
  // and rank cuts / 0-1 weight prefixes at the n attained levels. Each family
  // reports the direct relation's margin: the families decide the same
  // relation, so marginality of the instance is what matters.
  const std::size_t n = x.size();
  std::vector<double> cuts(x);
  cuts.insert(cuts.end(), y.begin(), y.end());
  cuts.push_back(hi + 1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const MonotonePL rank_id = MonotonePL::identity(0.0, 1.0);
  const MonotonePL wealth_id = MonotonePL::identity(lo - 1.0, hi + 1.0);
  bool all_gap = true;
  bool all_totals = true;
  for (double c : cuts) {
    const MajorizationStatements s = majorization_statements(
        x, y, wealth_cut(lo - 1.0, hi + 1.0, c), rank_id, 0.0);
    all_gap = all_gap && s.cdf_gap_integral;
    all_totals = all_totals && s.utility_totals;
  }
  bool all_weights = true;
  bool all_spacings = true;
  for (std::size_t k = 1; k <= n; ++k) {
    const double level = static_cast<double>(k) / static_cast<double>(n);
    const MajorizationStatements s = majorization_statements(
        x, y, wealth_id, step_weight(k, n), 0.0);
    all_weights = all_weights && s.weighted_entry_sums;
    const MajorizationStatements r = majorization_statements(
        x, y, wealth_id, rank_cut(level), hi + 2.0);
    all_spacings = all_spacings && r.weighted_spacings;
  }
  out.push_back({"clamped-utility gap integrals", all_gap, direct.margin});
  out.push_back({"decreasing rank-weight sums", all_weights, direct.margin});
  out.push_back({"clamped-utility totals", all_totals, direct.margin});
  out.push_back({"rank-weighted spacing sums", all_spacings, direct.margin});
  return out;
}

std::vector<ClauseOutcome> evaluate_instance(const std::string& theorem,
                                             const Instance& inst) {
  if (theorem == "L3") return {l3_outcome(inst)};
  if (theorem == "COR1" || theorem == "COR2")
    return corollary_outcomes(theorem, inst);
  std::vector<ClauseOutcome> out;
  for (const NamedOrdering& clause : ordering_clauses(theorem)) {
    const OrderingVerdict v = clause.fn(inst.pair, inst.f1, inst.f2);
    out.push_back({clause.name, v.holds, v.margin});
  }
  return out;
}

// Single-clause suites are self-tests: the clause must hold outright.
bool trial_agrees(const std::vector<ClauseOutcome>& cs) {
  if (cs.size() == 1) return cs.front().holds;
  for (const ClauseOutcome& c : cs)
    if (c.holds != cs.front().holds) return false;
  return true;
}

bool trial_marginal(const std::vector<ClauseOutcome>& cs) {
  for (const ClauseOutcome& c : cs)
    if (std::fabs(c.margin) <= 2.0 * default_eps()) return true;
  return false;
}

void log_disagreement(EquivalenceReport& report, int trial,
                      std::vector<ClauseOutcome> cs, std::string instance) {
  Counterexample ce;
  ce.trial = trial;
  ce.tolerance_marginal = trial_marginal(cs);
  ce.instance = std::move(instance);
  ce.clauses = std::move(cs);
  if (ce.tolerance_marginal) ++report.tolerance_marginal;
  report.counterexamples.push_back(std::move(ce));
}

void require_known(const std::string& theorem) {
  const std::vector<std::string>& ids = known_theorems();
  if (std::find(ids.begin(), ids.end(), theorem) != ids.end()) return;
  std::string msg = "unknown suite id \"" + theorem + "\"; known ids:";
  for (const std::string& id : ids) msg += ' ' + id;
  throw Error(errc::unknown_theorem, msg);
}

void validate_spec(const InstanceSpec& spec) {
  if (spec.trials < 1 || spec.n_atoms_max < 1 || spec.n_knots_max < 2)
    throw Error(errc::bad_params,
                "instance spec needs trials >= 1, n_atoms_max >= 1 and "
                "n_knots_max >= 2");
  if (!std::isfinite(spec.value_range.first) ||
      !std::isfinite(spec.value_range.second) ||
      !(spec.value_range.first < spec.value_range.second))
    throw Error(errc::bad_params,
                "instance spec needs a finite value range with lo < hi");
}

}  // namespace

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> ids = {"T1",  "T1-star", "T2",   "T3",
                                               "L1",  "L3",      "EQ1",  "COR1",
                                               "COR2", "MAJ"};
  return ids;
}

EquivalenceReport run_equivalence_suite(const InstanceSpec& spec,
                                        const std::string& theorem) {
  require_known(theorem);
  validate_spec(spec);
  Sampler rng(spec.seed);
  EquivalenceReport report;
  report.theorem = theorem;
  report.trials = spec.trials;
  for (int t = 0; t < spec.trials; ++t) {
    if (theorem == "MAJ") {
      const int n = rng.integer(1, std::min(6, spec.n_atoms_max));
      const std::vector<double> x = random_vector(rng, n, spec);
      const int mode = rng.integer(0, 7);
      std::vector<double> y;
      if (mode == 0) {
        y = x;
      } else if (mode == 1) {
        const double mu =
            std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
        y.assign(x.size(), mu);  // x spreads its own mean: a sure-holds case
      } else {
        y = random_vector(rng, n, spec);
      }
      std::vector<ClauseOutcome> cs = maj_outcomes(x, y);
      if (trial_agrees(cs))
        ++report.agreements;
      else
        log_disagreement(report, t, std::move(cs), describe_vectors(x, y));
    } else {
      const Instance inst = random_instance(rng, spec);
      std::vector<ClauseOutcome> cs = evaluate_instance(theorem, inst);
      if (trial_agrees(cs))
        ++report.agreements;
      else
        log_disagreement(report, t, std::move(cs), describe_instance(inst));
    }
  }
  return report;
}

EquivalenceReport exhaustive_small_scan(const std::string& theorem, int n,
                                        const std::vector<double>& grid) {
  require_known(theorem);
  if (n < 1 || grid.empty())
    throw Error(errc::bad_params,
                "exhaustive scan needs n >= 1 and a non-empty grid");
  if (n > 4)
    throw Error(errc::scan_too_large, "exhaustive scan caps n at 4");
  double count = 1.0;
  for (int i = 0; i < n; ++i) count *= static_cast<double>(grid.size());
  if (count > 1e4)
    throw Error(errc::scan_too_large,
                "grid^n = " + fmt(count) + " exceeds the 10^4 vector cap");

  std::vector<std::vector<double>> vectors;
  vectors.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = grid[odo[static_cast<std::size_t>(i)]];
    vectors.push_back(std::move(v));
    int pos = n - 1;
    while (pos >= 0) {
      std::size_t& d = odo[static_cast<std::size_t>(pos)];
      if (++d < grid.size()) break;
      d = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  const double lo = *std::min_element(grid.begin(), grid.end());
  const double hi = *std::max_element(grid.begin(), grid.end());
  const StandardPair pair = identity_pair(lo - 1.0, hi + 1.0);

  EquivalenceReport report;
  report.theorem = theorem;
  report.trials = static_cast<int>(vectors.size() * vectors.size());
  int trial = 0;
  for (const std::vector<double>& x : vectors) {
    for (const std::vector<double>& y : vectors) {
      std::vector<ClauseOutcome> cs;
      if (theorem == "MAJ") {
        cs = maj_outcomes(x, y);
        if (trial_agrees(cs))
          ++report.agreements;
        else
          log_disagreement(report, trial, std::move(cs),
                           describe_vectors(x, y));
      } else {
        const Instance inst{pair, as_uniform_cdf(x), as_uniform_cdf(y)};
        cs = evaluate_instance(theorem, inst);
        if (trial_agrees(cs))
          ++report.agreements;
        else
          log_disagreement(report, trial, std::move(cs),
                           describe_instance(inst));
      }
      ++trial;
    }
  }
  return report;
}

}  // namespace stochord
