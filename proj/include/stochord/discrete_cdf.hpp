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

#ifndef STOCHORD_DISCRETE_CDF_HPP_
#define STOCHORD_DISCRETE_CDF_HPP_

#include <vector>

namespace stochord {

struct Atom {
  double location;
  double mass;  // strictly positive
};

struct Support {
  double min_loc;
  double max_loc;
};

// Right-continuous cdf of a finite discrete distribution. Atoms are kept
// sorted by location with exact-duplicate locations merged; masses sum to one
// (within kMassTol). Point evaluations use exact comparisons so that the
// Galois connection F(x) >= a  <=>  quantile(a) <= x holds crisply; the
// decision tolerance only enters at the ordering layer.
class DiscreteCdf {
 public:
  static DiscreteCdf from_atoms(std::vector<Atom> atoms, bool normalize = false);

  // P(X <= x) and its left limit P(X < x).
  double cdf(double x) const;
  double cdf_left(double x) const;

  // Left-continuous generalized inverse inf{x : F(x) >= alpha} for
  // alpha in (0,1); endpoints are rejected (the inf degenerates there).
  double quantile(double alpha) const;
  // inf{x : F(x) > alpha}: the right limit of the quantile function.
  double quantile_right(double alpha) const;
  // Quantile extended to alpha = 1 (the top atom); used internally by
  // identities that evaluate F^{-1} at attained upper levels.
  double quantile_closed(double alpha) const;

  // Distribution of -X: reflected locations, same masses.
  DiscreteCdf negated() const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  // Cumulative masses after each atom; back() == 1 within kMassTol.
  const std::vector<double>& levels() const { return levels_; }
  Support support() const;
  double mean() const;

 private:
  DiscreteCdf() = default;
  std::vector<Atom> atoms_;
  std::vector<double> levels_;
};

// Non-owning quantile view of a cdf.
class QuantileFn {
 public:
  explicit QuantileFn(const DiscreteCdf& source) : source_(&source) {}
  double operator()(double alpha) const { return source_->quantile(alpha); }
  const DiscreteCdf& source() const { return *source_; }

 private:
  const DiscreteCdf* source_;
};

}  // namespace stochord

#endif  // STOCHORD_DISCRETE_CDF_HPP_
