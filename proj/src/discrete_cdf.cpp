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

#include "stochord/discrete_cdf.hpp"

#include <algorithm>
#include <cmath>

#include "stochord/errors.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {

DiscreteCdf DiscreteCdf::from_atoms(std::vector<Atom> atoms, bool normalize) {
  if (atoms.empty()) {
    throw Error(errc::empty_support, "distribution needs at least one atom");
  }
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.location) || !std::isfinite(a.mass)) {
      throw Error(errc::bad_params, "atom with non-finite location or mass");
    }
    if (!(a.mass > 0.0)) {
      throw Error(errc::non_positive_mass, "atom masses must be positive");
    }
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return a.location < b.location;
  });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!merged.empty() && merged.back().location == a.location) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  double total = 0.0;
  for (const Atom& a : merged) total += a.mass;
  if (normalize) {
    for (Atom& a : merged) a.mass /= total;
  } else if (std::abs(total - 1.0) > kMassTol) {
    throw Error(errc::mass_not_normalized,
                "atom masses sum to " + std::to_string(total));
  }
  DiscreteCdf f;
  f.atoms_ = std::move(merged);
  f.levels_.reserve(f.atoms_.size());
  double run = 0.0;
  for (const Atom& a : f.atoms_) {
    run += a.mass;
    f.levels_.push_back(run);
  }
  return f;
}

double DiscreteCdf::cdf(double x) const {
  // Index of the last atom with location <= x.
  auto it = std::upper_bound(
      atoms_.begin(), atoms_.end(), x,
      [](double v, const Atom& a) { return v < a.location; });
  if (it == atoms_.begin()) return 0.0;
  return levels_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteCdf::cdf_left(double x) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), x,
      [](const Atom& a, double v) { return a.location < v; });
  if (it == atoms_.begin()) return 0.0;
  return levels_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteCdf::quantile(double alpha) const {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw Error(errc::alpha_out_of_range,
                "quantile defined on (0,1); got " + std::to_string(alpha));
  }
  auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha);
  if (it == levels_.end()) return atoms_.back().location;  // rounding slack
  return atoms_[static_cast<std::size_t>(it - levels_.begin())].location;
}

double DiscreteCdf::quantile_right(double alpha) const {
  auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
  if (it == levels_.end()) return atoms_.back().location;
  return atoms_[static_cast<std::size_t>(it - levels_.begin())].location;
}

double DiscreteCdf::quantile_closed(double alpha) const {
  if (alpha >= levels_.back()) return atoms_.back().location;
  return quantile(alpha);
}

DiscreteCdf DiscreteCdf::negated() const {
  std::vector<Atom> neg;
  neg.reserve(atoms_.size());
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    neg.push_back({-it->location, it->mass});
  }
  DiscreteCdf f;
  f.atoms_ = std::move(neg);
  f.levels_.reserve(f.atoms_.size());
  double run = 0.0;
  for (const Atom& a : f.atoms_) {
    run += a.mass;
    f.levels_.push_back(run);
  }
  return f;
}

Support DiscreteCdf::support() const {
  return {atoms_.front().location, atoms_.back().location};
}

double DiscreteCdf::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.location * a.mass;
  return m;
}

}  // namespace stochord
