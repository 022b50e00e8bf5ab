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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "stochord/errors.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

void require_compatible(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw Error(errc::length_mismatch,
                "majorization needs equal-length vectors, got " +
                    std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
  if (x.empty()) {
    throw Error(errc::bad_params, "majorization needs non-empty vectors");
  }
}

std::vector<double> sorted_ascending(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> elementwise_log(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double e : v) {
    if (!(e > 0.0)) {
      throw Error(errc::non_positive_entry_for_log,
                  "log relation needs strictly positive entries, got " +
                      std::to_string(e));
    }
    out.push_back(std::log(e));
  }
  return out;
}

}  // namespace

MajorizationVerdict majorizes(const std::vector<double>& x,
                              const std::vector<double>& y, MajorKind kind) {
  require_compatible(x, y);
  if (kind == MajorKind::kLog) {
    return majorizes(elementwise_log(x), elementwise_log(y),
                     MajorKind::kStrong);
  }

  const double eps = default_eps();
  MajorizationVerdict out;
  out.holds = true;
  out.margin = std::numeric_limits<double>::infinity();
  const auto feed = [&](std::size_t k, double slack) {
    out.margin = std::min(out.margin, slack);
    if (slack < -eps && !out.witness_k.has_value()) {
      out.holds = false;
      out.witness_k = k;
    }
  };

  const std::size_t n = x.size();
  if (kind == MajorKind::kWeakUpper) {
    const std::vector<double> ax = sorted_ascending(x);
    const std::vector<double> ay = sorted_ascending(y);
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      sx += ax[k - 1];
      sy += ay[k - 1];
      feed(k, sy - sx);
    }
    return out;
  }

  // kStrong and kWeakLower share the descending partial-sum scan; kStrong
  // swaps the k = n inequality for the equal-totals condition.
  std::vector<double> dx = sorted_ascending(x);
  std::vector<double> dy = sorted_ascending(y);
  std::reverse(dx.begin(), dx.end());
  std::reverse(dy.begin(), dy.end());
  const std::size_t top = (kind == MajorKind::kStrong) ? n - 1 : n;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 1; k <= top; ++k) {
    sx += dx[k - 1];
    sy += dy[k - 1];
    feed(k, sx - sy);
  }
  if (kind == MajorKind::kStrong) {
    sx += dx[n - 1];
    sy += dy[n - 1];
    feed(n, -std::fabs(sx - sy));
  }
  return out;
}

MajorizationStatements majorization_statements(const std::vector<double>& x,
                                               const std::vector<double>& y,
                                               const MonotonePL& u,
                                               const MonotonePL& v, double K) {
  require_compatible(x, y);
  const double eps = default_eps();
  const std::size_t n = x.size();
  const double nn = static_cast<double>(n);
  const std::vector<double> ax = sorted_ascending(x);
  const std::vector<double> ay = sorted_ascending(y);

  // Closing both rank-weighted sums at the shared top entry makes each equal
  // to the full-line integral of its cdf against u, so the comparison is the
  // cumulative criterion of the distributional ordering.
  const double top = std::max(ax.back(), ay.back());
  const auto cdf_side = [&](const std::vector<double>& a) {
    double s = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      s += (static_cast<double>(k) / nn) * (u(a[k]) - u(a[k - 1]));
    }
    s += u(top) - u(a.back());
    return s;
  };

  const auto weighted_entries = [&](const std::vector<double>& a) {
    double s = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double weight = v(static_cast<double>(i) / nn) -
                            v(static_cast<double>(i - 1) / nn);
      s += weight * a[i - 1];
    }
    return s;
  };

  const auto utility_total = [&](const std::vector<double>& raw) {
    double s = 0.0;
    for (double e : raw) s += u(e);
    return s;
  };

  const auto weighted_spacings = [&](const std::vector<double>& a) {
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      s += v(static_cast<double>(i) / nn) * (a[i] - a[i - 1]);
    }
    s += v(1.0) * (K - a.back());
    return s;
  };

  MajorizationStatements out;
  out.cdf_gap_integral = cdf_side(ax) >= cdf_side(ay) - eps;
  out.weighted_entry_sums = weighted_entries(ax) <= weighted_entries(ay) + eps;
  out.utility_totals = utility_total(x) <= utility_total(y) + eps;
  out.weighted_spacings = weighted_spacings(ax) >= weighted_spacings(ay) - eps;
  return out;
}

DiscreteCdf as_uniform_cdf(const std::vector<double>& x) {
  if (x.empty()) {
    throw Error(errc::bad_params, "a uniform law needs at least one entry");
  }
  const double w = 1.0 / static_cast<double>(x.size());
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  for (double e : x) atoms.push_back({e, w});
  return DiscreteCdf::from_atoms(std::move(atoms));
}

}  // namespace stochord
