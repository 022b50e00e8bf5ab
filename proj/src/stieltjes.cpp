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

#include "stochord/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>
#include <vector>

#include "stochord/errors.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_value(double y, double x) {
  if (std::isnan(y)) {
    throw Error(errc::evaluation_gap,
                "integrand has no defined value at x=" + std::to_string(x));
  }
}

double checked_total(double total) {
  if (!std::isfinite(total)) {
    throw Error(errc::non_finite_integral,
                "integral did not reduce to a finite sum");
  }
  return total;
}

}  // namespace

IntegralResult ls_integral(const Piecewise& integrand, const StepFn& integrator,
                           double a, double b) {
  IntegralResult result;
  double total = 0.0;
  for (const JumpAtom& jump : integrator.jumps()) {
    const bool inside = integrator.continuity() == Continuity::kRight
                            ? (a < jump.x && jump.x <= b)
                            : (a <= jump.x && jump.x < b);
    if (!inside) continue;
    const double g = value_at(integrand, jump.x);
    require_finite_value(g, jump.x);
    total += g * jump.delta;
    result.atoms_counted.push_back(jump.x);
  }
  result.value = checked_total(total);
  return result;
}

IntegralResult ls_integral(const Piecewise& integrand,
                           const MonotonePL& integrator, double a, double b) {
  IntegralResult result;
  // The measure lives on the knot span; outside it the integrator is flat.
  const double lo = std::max(a, integrator.front_x());
  const double hi = std::min(b, integrator.back_x());
  if (!(lo < hi)) {
    result.value = 0.0;
    return result;
  }

  std::vector<double> cuts;
  cuts.push_back(lo);
  for (const Knot& k : integrator.knots()) {
    if (k.x > lo && k.x < hi) cuts.push_back(k.x);
  }
  for (double x : breakpoints_of(integrand)) {
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double l = cuts[i];
    const double r = cuts[i + 1];
    const double dv = integrator(r) - integrator(l);
    if (dv == 0.0) continue;
    // The integrand is linear strictly inside (l, r), so the exact value of
    // the piece is the uniform measure times the midpoint of its one-sided
    // limits at the ends.
    const double gl = right_limit_at(integrand, l);
    const double gr = left_limit_at(integrand, r);
    require_finite_value(gl, l);
    require_finite_value(gr, r);
    total += dv * 0.5 * (gl + gr);
  }
  result.value = checked_total(total);
  return result;
}

IntegralResult ls_integral(const Piecewise& integrand,
                           const Piecewise& integrator, double a, double b) {
  return std::visit(
      [&](const auto& v) { return ls_integral(integrand, v, a, b); },
      integrator);
}

IntegralResult ls_integral(const Piecewise& integrand, const StepFn& jump_part,
                           const MonotonePL& continuous_part, double a,
                           double b) {
  IntegralResult jumps = ls_integral(integrand, jump_part, a, b);
  const IntegralResult smooth = ls_integral(integrand, continuous_part, a, b);
  jumps.value = checked_total(jumps.value + smooth.value);
  return jumps;
}

double integrate_by_parts_check(const Piecewise& u, const Piecewise& v,
                                double a, double b) {
  if (continuity_of(u) == Continuity::kRight) {
    throw Error(errc::continuity_mismatch,
                "summation by parts needs the first factor left-continuous "
                "or continuous");
  }
  if (continuity_of(v) == Continuity::kLeft) {
    throw Error(errc::continuity_mismatch,
                "summation by parts needs the second factor right-continuous "
                "or continuous");
  }
  const double term_u_dv = ls_integral(u, v, a, b).value;  // over (a, b]
  const double term_v_du = ls_integral(v, u, a, b).value;  // over [a, b)
  const double boundary = value_at(u, b) * value_at(v, b) -
                          value_at(u, a) * value_at(v, a);
  return std::abs(term_u_dv + term_v_du - boundary);
}

double change_of_variables_check(const MonotonePL& u, const MonotonePL& v,
                                 const DiscreteCdf& f, CvIdentity which) {
  const StepFn distorted_cdf = compose(v, step_of_cdf(f));
  const StepFn quantile_utility = compose(u, step_of_quantile(f));
  switch (which) {
    case CvIdentity::kLineToRank: {
      const double line = ls_integral(u, distorted_cdf, -kInf, kInf).value;
      const double rank = ls_integral(quantile_utility, v, 0.0, 1.0).value;
      return std::abs(line - rank);
    }
    case CvIdentity::kLineToRankPartial: {
      double worst = 0.0;
      for (const Atom& atom : f.atoms()) {
        const double cut = atom.location;
        const double line =
            ls_integral(u, distorted_cdf, -kInf, cut).value;
        const double rank =
            ls_integral(quantile_utility, v, 0.0, f.cdf(cut)).value;
        worst = std::max(worst, std::abs(line - rank));
      }
      return worst;
    }
    case CvIdentity::kRankToLine: {
      const double line = ls_integral(distorted_cdf, u, -kInf, kInf).value;
      const double rank = ls_integral(v, rank_measure(u, f), -kInf, kInf).value;
      return std::abs(line - rank);
    }
    case CvIdentity::kRankToLinePartial: {
      double worst = 0.0;
      for (double level : f.levels()) {
        // The level-increment function u(F^{-1}) is left-continuous, so the
        // range below reads as [0, level), which has no atom at 0.
        const double rank =
            ls_integral(v, quantile_utility, 0.0, level).value;
        const double line =
            ls_integral(distorted_cdf, u, -kInf, f.quantile_closed(level))
                .value;
        worst = std::max(worst, std::abs(rank - line));
      }
      return worst;
    }
  }
  throw Error(errc::bad_params, "unknown change-of-variables identity");
}

double corner_identity_residual(const MonotonePL& u0, const MonotonePL& v0,
                                const DiscreteCdf& f, double x1,
                                double alpha1) {
  const double eps = default_eps();
  if (!(f.cdf_left(x1) - eps <= alpha1 && alpha1 <= f.cdf(x1) + eps)) {
    throw Error(errc::not_a_compatible_pair,
                "corner level must lie between F(x-) and F(x) at the corner "
                "point");
  }
  const double line_part =
      ls_integral(compose(v0, step_of_cdf(f)), u0, -kInf, x1).value;
  const double rank_part =
      ls_integral(compose(u0, step_of_quantile(f)), v0, 0.0, alpha1).value;
  const double q_at_alpha =
      alpha1 <= 0.0 ? -kInf : f.quantile_closed(std::min(alpha1, 1.0));
  const double u_at_q = u0(q_at_alpha);
  const double v_at_fx = v0(f.cdf(x1));
  const double boundary =
      v_at_fx * u0(x1) + v0(alpha1) * u_at_q - v_at_fx * u_at_q;
  return std::abs(line_part + rank_part - boundary);
}

StepFn step_of_cdf(const DiscreteCdf& f) {
  std::vector<JumpAtom> jumps;
  jumps.reserve(f.atoms().size());
  for (const Atom& atom : f.atoms()) jumps.push_back({atom.location, atom.mass});
  return StepFn(0.0, std::move(jumps), Continuity::kRight);
}

StepFn survivor_step(const DiscreteCdf& f) {
  std::vector<JumpAtom> jumps;
  jumps.reserve(f.atoms().size());
  for (const Atom& atom : f.atoms()) {
    jumps.push_back({atom.location, -atom.mass});
  }
  return StepFn(1.0, std::move(jumps), Continuity::kRight);
}

StepFn step_of_quantile(const DiscreteCdf& f) {
  const std::vector<Atom>& atoms = f.atoms();
  const std::vector<double>& levels = f.levels();
  std::vector<JumpAtom> jumps;
  jumps.reserve(atoms.size());
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    jumps.push_back({levels[i], atoms[i + 1].location - atoms[i].location});
  }
  return StepFn(atoms.front().location, std::move(jumps), Continuity::kLeft);
}

StepFn compose(const MonotonePL& g, const StepFn& s) {
  std::vector<JumpAtom> jumps;
  jumps.reserve(s.jumps().size());
  double running = s.base();
  double g_before = g(running);
  for (const JumpAtom& jump : s.jumps()) {
    running += jump.delta;
    const double g_after = g(running);
    jumps.push_back({jump.x, g_after - g_before});
    g_before = g_after;
  }
  return StepFn(g(s.base()), std::move(jumps), s.continuity());
}

StepFn rank_measure(const MonotonePL& u, const DiscreteCdf& f) {
  const std::vector<Atom>& atoms = f.atoms();
  const std::vector<double>& levels = f.levels();
  std::vector<JumpAtom> jumps;
  jumps.reserve(atoms.size() + 1);
  // Variation of u below the lowest atom and above the highest one sits at
  // the rank-scale boundary; dropping these atoms would make comparisons of
  // point masses degenerate.
  jumps.push_back({0.0, u(atoms.front().location) - u.front_value()});
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    jumps.push_back(
        {levels[i], u(atoms[i + 1].location) - u(atoms[i].location)});
  }
  jumps.push_back({1.0, u.back_value() - u(atoms.back().location)});
  return StepFn(u.front_value(), std::move(jumps), Continuity::kRight);
}

StepFn step_difference(const StepFn& a, const StepFn& b) {
  if (a.continuity() != b.continuity()) {
    throw Error(errc::continuity_mismatch,
                "difference of step functions needs matching continuity tags");
  }
  std::vector<JumpAtom> jumps = a.jumps();
  jumps.reserve(jumps.size() + b.jumps().size());
  for (const JumpAtom& jump : b.jumps()) jumps.push_back({jump.x, -jump.delta});
  return StepFn(a.base() - b.base(), std::move(jumps), a.continuity());
}

}  // namespace stochord
