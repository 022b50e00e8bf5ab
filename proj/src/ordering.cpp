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

#include "stochord/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "stochord/errors.hpp"
#include "stochord/stieltjes.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Ineq { kGe, kLe };

// Tracks the scan point with the least oriented slack; every criterion here
// is "slack >= -eps at every scan point".
class ScanBest {
 public:
  void feed(double at, double lhs, double rhs, Ineq sense) {
    const double m = sense == Ineq::kGe ? lhs - rhs : rhs - lhs;
    if (!fed_ || m < margin_) {
      margin_ = m;
      best_ = OrderingWitness{at, lhs, rhs};
      fed_ = true;
    }
  }

  OrderingVerdict verdict(std::string statement) const {
    OrderingVerdict v;
    v.statement = std::move(statement);
    if (!fed_) {
      v.holds = true;
      v.margin = 0.0;
      return v;
    }
    v.margin = margin_;
    v.holds = margin_ >= -default_eps();
    v.witness = best_;
    return v;
  }

 private:
  bool fed_ = false;
  double margin_ = 0.0;
  OrderingWitness best_;
};

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Cuts where the head cumulative criteria can kink, dropping everything at
// or below the smallest merged atom (the integrals are identically zero
// there) and appending +inf for the full-mass condition.
std::vector<double> head_line_scan(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2) {
  const double m =
      std::min(f1.support().min_loc, f2.support().min_loc);
  std::vector<double> xs;
  for (const Atom& a : f1.atoms())
    if (a.location > m) xs.push_back(a.location);
  for (const Atom& a : f2.atoms())
    if (a.location > m) xs.push_back(a.location);
  for (const Knot& k : pair.u0.knots())
    if (k.x > m) xs.push_back(k.x);
  xs.push_back(kInf);
  sort_unique(xs);
  return xs;
}

// Mirror image for the tail criteria: drop cuts at or above the largest
// merged atom, append -inf.
std::vector<double> tail_line_scan(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2) {
  const double m =
      std::max(f1.support().max_loc, f2.support().max_loc);
  std::vector<double> xs;
  for (const Atom& a : f1.atoms())
    if (a.location < m) xs.push_back(a.location);
  for (const Atom& a : f2.atoms())
    if (a.location < m) xs.push_back(a.location);
  for (const Knot& k : pair.u0.knots())
    if (k.x < m) xs.push_back(k.x);
  xs.push_back(-kInf);
  sort_unique(xs);
  return xs;
}

// Levels where the head rank-scale criteria can kink: every attained level
// of either cdf, every v0 knot inside the unit interval, and 1 itself.
// Level 0 is dropped (the integrals vanish there identically).
std::vector<double> head_rank_scan(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2) {
  std::vector<double> ps;
  for (double l : f1.levels())
    if (l > 0.0) ps.push_back(std::min(l, 1.0));
  for (double l : f2.levels())
    if (l > 0.0) ps.push_back(std::min(l, 1.0));
  for (const Knot& k : pair.v0.knots())
    if (k.x > 0.0 && k.x <= 1.0) ps.push_back(k.x);
  ps.push_back(1.0);
  sort_unique(ps);
  return ps;
}

// Mirror image for the tail criteria: interior levels (each cdf's top level
// is dropped — the tail integrals vanish identically at 1), v0 knots below
// 1, and 0 itself.
std::vector<double> tail_rank_scan(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2) {
  std::vector<double> ps;
  const auto interior = [&ps](const DiscreteCdf& f) {
    const auto& ls = f.levels();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) ps.push_back(ls[i]);
  };
  interior(f1);
  interior(f2);
  for (const Knot& k : pair.v0.knots())
    if (k.x >= 0.0 && k.x < 1.0) ps.push_back(k.x);
  ps.push_back(0.0);
  sort_unique(ps);
  return ps;
}

StepFn distorted_cdf(const MonotonePL& v0, const DiscreteCdf& f) {
  return compose(v0, step_of_cdf(f));
}

StepFn quantile_utility(const MonotonePL& u0, const DiscreteCdf& f) {
  return compose(u0, step_of_quantile(f));
}

}  // namespace

std::vector<CrossingInterval> find_crossings(const DiscreteCdf& f1,
                                             const DiscreteCdf& f2) {
  std::vector<double> bps;
  for (const Atom& a : f1.atoms()) bps.push_back(a.location);
  for (const Atom& a : f2.atoms()) bps.push_back(a.location);
  sort_unique(bps);

  const double eps = default_eps();
  // Segment i covers [bps[i], bps[i+1]) (the last reaches +inf, where both
  // cdfs are 1, so its sign is always 0).
  std::vector<int> sign(bps.size());
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const double d = f1.cdf(bps[i]) - f2.cdf(bps[i]);
    sign[i] = d > eps ? 1 : (d < -eps ? -1 : 0);
  }

  double min_gap = kInf;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    min_gap = std::min(min_gap, bps[i + 1] - bps[i]);
  const double probe_d = std::isfinite(min_gap) ? min_gap / 2.0 : 0.5;

  std::vector<CrossingInterval> out;
  std::ptrdiff_t prev = -1;
  for (std::size_t j = 0; j < bps.size(); ++j) {
    if (sign[j] == 0) continue;
    if (prev >= 0 && sign[prev] != sign[j]) {
      CrossingInterval ci;
      ci.lo = bps[prev + 1];
      ci.hi = bps[j];
      ci.direction = sign[j] > 0 ? CrossDirection::kUp : CrossDirection::kDown;
      const double before = ci.lo - probe_d;
      const double after = ci.hi + probe_d;
      ci.probe_before = f1.cdf(before) - f2.cdf(before);
      ci.probe_after = f1.cdf(after) - f2.cdf(after);
      out.push_back(ci);
    }
    prev = static_cast<std::ptrdiff_t>(j);
  }
  return out;
}

OrderingVerdict lemma1_cdf_side(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  ScanBest best;
  for (double c : head_line_scan(pair, f1, f2)) {
    best.feed(c, ls_integral(d1, pair.u0, -kInf, c).value,
              ls_integral(d2, pair.u0, -kInf, c).value, Ineq::kGe);
  }
  return best.verdict("T1.i");
}

OrderingVerdict lemma1_quantile_side(const StandardPair& pair,
                                     const DiscreteCdf& f1,
                                     const DiscreteCdf& f2) {
  const StepFn q1 = quantile_utility(pair.u0, f1);
  const StepFn q2 = quantile_utility(pair.u0, f2);
  ScanBest best;
  for (double p : head_rank_scan(pair, f1, f2)) {
    best.feed(p, ls_integral(q1, pair.v0, 0.0, p).value,
              ls_integral(q2, pair.v0, 0.0, p).value, Ineq::kLe);
  }
  return best.verdict("T1.ii");
}

OrderingVerdict upper_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2) {
  return lemma1_cdf_side(pair, f1, f2);
}

OrderingVerdict t2_reflected(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2) {
  const StandardPair reflected = tilde_transform(pair);
  const OrderingVerdict inner =
      lemma1_cdf_side(reflected, f2.negated(), f1.negated());
  OrderingVerdict out;
  out.holds = inner.holds;
  out.margin = inner.margin;
  out.statement = "T2.reflected";
  if (inner.witness) {
    // Map the reflected cut back to the original line and report the two
    // tail integrals compared there.
    const double at = -inner.witness->at;
    const StepFn d1 = distorted_cdf(pair.v0, f1);
    const StepFn d2 = distorted_cdf(pair.v0, f2);
    out.witness =
        OrderingWitness{at, ls_integral(d1, pair.u0, at, kInf).value,
                        ls_integral(d2, pair.u0, at, kInf).value};
  }
  return out;
}

OrderingVerdict lower_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2) {
  return t2_reflected(pair, f1, f2);
}

OrderingVerdict double_ordering(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2) {
  const OrderingVerdict head = lemma1_cdf_side(pair, f1, f2);
  const OrderingVerdict tail = t2_reflected(pair, f2, f1);
  const OrderingVerdict& tight = head.margin <= tail.margin ? head : tail;
  OrderingVerdict out;
  out.holds = head.holds && tail.holds;
  out.margin = tight.margin;
  out.witness = tight.witness;
  out.statement =
      out.holds ? "T3" : std::string("T3(") + tight.statement + ")";
  return out;
}

OrderingVerdict classic(std::string_view name, const DiscreteCdf& f1,
                        const DiscreteCdf& f2) {
  if (name == "FSD") {
    std::vector<double> bps;
    for (const Atom& a : f1.atoms()) bps.push_back(a.location);
    for (const Atom& a : f2.atoms()) bps.push_back(a.location);
    sort_unique(bps);
    ScanBest best;
    for (double x : bps) best.feed(x, f1.cdf(x), f2.cdf(x), Ineq::kGe);
    return best.verdict("FSD");
  }
  const double lo =
      std::min(f1.support().min_loc, f2.support().min_loc) - 1.0;
  const double hi =
      std::max(f1.support().max_loc, f2.support().max_loc) + 1.0;
  const StandardPair id = identity_pair(lo, hi);
  if (name == "SSD") return lemma1_cdf_side(id, f1, f2);
  if (name == "ICV") return t1_utility_rays(id, f1, f2);
  if (name == "ICX") return lower_ordering(id, f1, f2);
  if (name == "LORENZ_WEAK") return lemma1_quantile_side(id, f1, f2);
  if (name == "LORENZ_UPPER") return t2_tail_quantile_cumulative(id, f1, f2);
  throw Error(errc::unknown_name,
              "unknown classical ordering: " + std::string(name));
}

OrderingVerdict t1_utility_rays(const StandardPair& pair, const DiscreteCdf& f1,
                                const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  ScanBest best;
  for (double c : head_line_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.u0, c);
    best.feed(c, ls_integral(ray, d1, -kInf, kInf).value,
              ls_integral(ray, d2, -kInf, kInf).value, Ineq::kLe);
  }
  return best.verdict("T1.iii");
}

OrderingVerdict t1_rank_rays(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2) {
  const StepFn nu1 = rank_measure(pair.u0, f1);
  const StepFn nu2 = rank_measure(pair.u0, f2);
  ScanBest best;
  for (double p : head_rank_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.v0, p);
    best.feed(p, ls_integral(ray, nu1, -kInf, kInf).value,
              ls_integral(ray, nu2, -kInf, kInf).value, Ineq::kGe);
  }
  return best.verdict("T1.iv");
}

OrderingVerdict t1_rank_image_rays(const StandardPair& pair,
                                   const DiscreteCdf& f1,
                                   const DiscreteCdf& f2) {
  ScanBest best;
  for (double c : head_line_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.u0, c);
    const StepFn nu1 = rank_measure(ray, f1);
    const StepFn nu2 = rank_measure(ray, f2);
    best.feed(c, ls_integral(pair.v0, nu1, -kInf, kInf).value,
              ls_integral(pair.v0, nu2, -kInf, kInf).value, Ineq::kGe);
  }
  return best.verdict("T1.i*");
}

OrderingVerdict t1_distorted_cdf_rays(const StandardPair& pair,
                                      const DiscreteCdf& f1,
                                      const DiscreteCdf& f2) {
  const StepFn steps1 = step_of_cdf(f1);
  const StepFn steps2 = step_of_cdf(f2);
  ScanBest best;
  for (double p : head_rank_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.v0, p);
    best.feed(p, ls_integral(pair.u0, compose(ray, steps1), -kInf, kInf).value,
              ls_integral(pair.u0, compose(ray, steps2), -kInf, kInf).value,
              Ineq::kLe);
  }
  return best.verdict("T1.ii*");
}

OrderingVerdict t1_quantile_utility_rays(const StandardPair& pair,
                                         const DiscreteCdf& f1,
                                         const DiscreteCdf& f2) {
  const StepFn steps1 = step_of_quantile(f1);
  const StepFn steps2 = step_of_quantile(f2);
  ScanBest best;
  for (double c : head_line_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.u0, c);
    best.feed(c, ls_integral(compose(ray, steps1), pair.v0, 0.0, 1.0).value,
              ls_integral(compose(ray, steps2), pair.v0, 0.0, 1.0).value,
              Ineq::kLe);
  }
  return best.verdict("T1.iii*");
}

OrderingVerdict t1_cdf_distortion_rays(const StandardPair& pair,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2) {
  const StepFn steps1 = step_of_cdf(f1);
  const StepFn steps2 = step_of_cdf(f2);
  ScanBest best;
  for (double p : head_rank_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.v0, p);
    best.feed(p, ls_integral(compose(ray, steps1), pair.u0, -kInf, kInf).value,
              ls_integral(compose(ray, steps2), pair.u0, -kInf, kInf).value,
              Ineq::kGe);
  }
  return best.verdict("T1.iv*");
}

OrderingVerdict t2_tail_cdf_cumulative(const StandardPair& pair,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  ScanBest best;
  for (double c : tail_line_scan(pair, f1, f2)) {
    best.feed(c, ls_integral(d1, pair.u0, c, kInf).value,
              ls_integral(d2, pair.u0, c, kInf).value, Ineq::kGe);
  }
  return best.verdict("T2.i");
}

OrderingVerdict t2_tail_quantile_cumulative(const StandardPair& pair,
                                            const DiscreteCdf& f1,
                                            const DiscreteCdf& f2) {
  const StepFn q1 = quantile_utility(pair.u0, f1);
  const StepFn q2 = quantile_utility(pair.u0, f2);
  ScanBest best;
  for (double q : tail_rank_scan(pair, f1, f2)) {
    best.feed(q, ls_integral(q1, pair.v0, q, 1.0).value,
              ls_integral(q2, pair.v0, q, 1.0).value, Ineq::kLe);
  }
  return best.verdict("T2.ii");
}

OrderingVerdict t2_ramp_rays(const StandardPair& pair, const DiscreteCdf& f1,
                             const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  ScanBest best;
  for (double c : tail_line_scan(pair, f1, f2)) {
    const MonotonePL ray = ramp_from(pair.u0, c);
    best.feed(c, ls_integral(ray, d1, -kInf, kInf).value,
              ls_integral(ray, d2, -kInf, kInf).value, Ineq::kLe);
  }
  return best.verdict("T2.iii");
}

OrderingVerdict t2_tail_rank_rays(const StandardPair& pair,
                                  const DiscreteCdf& f1,
                                  const DiscreteCdf& f2) {
  const StepFn nu1 = rank_measure(pair.u0, f1);
  const StepFn nu2 = rank_measure(pair.u0, f2);
  ScanBest best;
  for (double q : tail_rank_scan(pair, f1, f2)) {
    const MonotonePL ray = ramp_from(pair.v0, q);
    best.feed(q, ls_integral(ray, nu1, -kInf, kInf).value,
              ls_integral(ray, nu2, -kInf, kInf).value, Ineq::kGe);
  }
  return best.verdict("T2.iv");
}

OrderingVerdict t3_two_sided_cdf(const StandardPair& pair,
                                 const DiscreteCdf& f1, const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  const double full_gap = ls_integral(d1, pair.u0, -kInf, kInf).value -
                          ls_integral(d2, pair.u0, -kInf, kInf).value;
  ScanBest best;
  // Below the smallest atom the head integral is identically zero, so the
  // head condition is vacuous there but the tail condition degenerates to
  // 0 >= full_gap; feed that limit once.
  best.feed(-kInf, 0.0, full_gap, Ineq::kGe);
  for (double c : head_line_scan(pair, f1, f2)) {
    const double lhs = ls_integral(d1, pair.u0, -kInf, c).value;
    const double rhs = ls_integral(d2, pair.u0, -kInf, c).value;
    best.feed(c, lhs, rhs, Ineq::kGe);
    best.feed(c, lhs - rhs, full_gap, Ineq::kGe);
  }
  return best.verdict("T3.two_sided");
}

OrderingVerdict t3_signed_rays(const StandardPair& pair, const DiscreteCdf& f1,
                               const DiscreteCdf& f2) {
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  ScanBest best;
  for (double c : head_line_scan(pair, f1, f2)) {
    const MonotonePL ray = clamp_above(pair.u0, c);
    best.feed(c, ls_integral(ray, d1, -kInf, kInf).value,
              ls_integral(ray, d2, -kInf, kInf).value, Ineq::kLe);
  }
  for (double c : tail_line_scan(pair, f1, f2)) {
    const MonotonePL ray = ramp_from(pair.u0, c);
    best.feed(c, ls_integral(ray, d1, -kInf, kInf).value,
              ls_integral(ray, d2, -kInf, kInf).value, Ineq::kGe);
  }
  return best.verdict("T3.rays");
}

CrossingCouplingReport crossing_coupling_check(const StandardPair& pair,
                                               const DiscreteCdf& f1,
                                               const DiscreteCdf& f2) {
  CrossingCouplingReport report;
  const std::vector<CrossingInterval> crossings = find_crossings(f1, f2);
  report.crossings = static_cast<int>(crossings.size());
  if (crossings.empty()) return report;

  const double eps = default_eps();
  const StepFn d1 = distorted_cdf(pair.v0, f1);
  const StepFn d2 = distorted_cdf(pair.v0, f2);
  const StepFn q1 = quantile_utility(pair.u0, f1);
  const StepFn q2 = quantile_utility(pair.u0, f2);
  const std::vector<double> kinks = head_rank_scan(pair, f1, f2);

  for (const CrossingInterval& ci : crossings) {
    const double head_gap = ls_integral(d1, pair.u0, -kInf, ci.lo).value -
                            ls_integral(d2, pair.u0, -kInf, ci.lo).value;
    if (head_gap < -eps) continue;  // premise fails: nothing implied
    ++report.bands_checked;
    double band_lo, band_hi;
    if (ci.direction == CrossDirection::kUp) {
      band_lo = f2.cdf_left(ci.lo);
      band_hi = f2.cdf(ci.hi);
    } else {
      band_lo = f1.cdf_left(ci.lo);
      band_hi = f1.cdf(ci.hi);
    }
    std::vector<double> band = {band_lo, band_hi};
    for (double p : kinks)
      if (p > band_lo && p < band_hi) band.push_back(p);
    for (double p : band) {
      const double lhs = ls_integral(q1, pair.v0, 0.0, p).value;
      const double rhs = ls_integral(q2, pair.v0, 0.0, p).value;
      if (lhs - rhs > eps) {
        report.implication_ok = false;
        report.counterexample = OrderingWitness{p, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

}  // namespace stochord
