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

#include "stochord/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "stochord/distortion.hpp"
#include "stochord/errors.hpp"
#include "stochord/ordering.hpp"
#include "stochord/stieltjes.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MonotonePL identity_over_support(const DiscreteCdf& f) {
  const Support s = f.support();
  return MonotonePL::identity(s.min_loc - 1.0, s.max_loc + 1.0);
}

MonotonePL identity_over_supports(const DiscreteCdf& f1,
                                  const DiscreteCdf& f2) {
  const Support a = f1.support();
  const Support b = f2.support();
  return MonotonePL::identity(std::min(a.min_loc, b.min_loc) - 1.0,
                              std::max(a.max_loc, b.max_loc) + 1.0);
}

}  // namespace

Perception make_perception(MonotonePL f0, std::string label) {
  // A perception obeys exactly the invariants of the rank component of a
  // standard pair, so the same validator applies.
  StandardPair checked =
      make_standard_pair(MonotonePL::identity(0.0, 1.0), std::move(f0));
  return Perception{std::move(checked.v0), std::move(label)};
}

Perception identity_perception() {
  return make_perception(MonotonePL::identity(0.0, 1.0), "identity");
}

double rdeu(const MonotonePL& u0, const Perception& f0, const DiscreteCdf& f) {
  const StepFn distorted = compose(f0.f0, step_of_cdf(f));
  return ls_integral(u0, distorted, -kInf, kInf).value;
}

YaariForms yaari_forms(const Perception& f0, const DiscreteCdf& f) {
  const MonotonePL wealth = identity_over_support(f);
  YaariForms out;
  out.cdf_form = rdeu(wealth, f0, f);
  const MonotonePL complement = complement_on_unit(f0.f0);
  out.survivor_form =
      -ls_integral(wealth, compose(complement, survivor_step(f)), -kInf, kInf)
           .value;
  out.quantile_form = ls_integral(step_of_quantile(f), f0.f0, 0.0, 1.0).value;
  return out;
}

double yaari(const Perception& f0, const DiscreteCdf& f) {
  const YaariForms forms = yaari_forms(f0, f);
  const double scale =
      std::max(1.0, std::max(std::fabs(forms.cdf_form),
                             std::fabs(forms.quantile_form)));
  if (std::fabs(forms.cdf_form - forms.quantile_form) >
      default_eps() * scale) {
    throw Error(errc::internal_identity_violation,
                "cdf-side and quantile-side rank-weighted means disagree: " +
                    std::to_string(forms.cdf_form) + " vs " +
                    std::to_string(forms.quantile_form));
  }
  return forms.cdf_form;
}

Perception s_gini_perception(double rho, int grid_size) {
  if (!std::isfinite(rho) || !(rho > 1.0)) {
    throw Error(errc::rho_out_of_range,
                "the power distortion needs rho > 1, got " +
                    std::to_string(rho));
  }
  if (grid_size < 2) {
    throw Error(errc::bad_params,
                "the power-distortion grid needs at least two knots");
  }
  std::vector<Knot> knots;
  knots.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double p = static_cast<double>(i) / (grid_size - 1);
    knots.push_back({p, std::pow(p, rho)});
  }
  return make_perception(MonotonePL(std::move(knots)),
                         "power(rho=" + std::to_string(rho) + ")");
}

double gini_index(const DiscreteCdf& f, int grid_size) {
  if (f.support().min_loc < 0.0) {
    throw Error(errc::bad_params,
                "the scalar index needs a nonnegative support");
  }
  const double mu = f.mean();
  if (!(mu > 0.0)) {
    throw Error(errc::bad_params, "the scalar index needs a positive mean");
  }
  return yaari(s_gini_perception(2.0, grid_size), f) / mu - 1.0;
}

std::pair<bool, bool> corollary1_check(const Perception& f0,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2) {
  const StandardPair pair =
      make_standard_pair(identity_over_supports(f1, f2), f0.f0);
  const bool s1 = t1_utility_rays(pair, f1, f2).holds;
  const bool s2 = lemma1_quantile_side(pair, f1, f2).holds;
  return {s1, s2};
}

std::pair<bool, bool> corollary2_check(const MonotonePL& u0,
                                       const Perception& f0,
                                       const DiscreteCdf& f1,
                                       const DiscreteCdf& f2) {
  const StandardPair pair = make_standard_pair(u0, f0.f0);
  const bool s3 = t1_utility_rays(pair, f1, f2).holds;
  const bool s4 = t1_distorted_cdf_rays(pair, f1, f2).holds;
  return {s3, s4};
}

}  // namespace stochord
