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

#ifndef STOCHORD_IO_HPP_
#define STOCHORD_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "stochord/discrete_cdf.hpp"
#include "stochord/distortion.hpp"
#include "stochord/dualcheck.hpp"

namespace stochord {

// ---- Distribution files. ----
// JSON: {"atoms": [[value, mass], ...]} or {"samples": [v, ...]}.
// CSV:  a value,mass header with two-column rows, or a headerless single
//       column of samples.
// Atom masses are positive weights and are normalized to total one; samples
// get weight 1/n each with duplicates merged. `format` is "json" or "csv";
// loading from a path picks the format from the extension, falling back to
// content sniffing. Malformed input raises parse_error.
DiscreteCdf parse_distribution(const std::string& text,
                               const std::string& format);
DiscreteCdf load_distribution(const std::string& path);
// Rendering is deterministic and round-trips: parsing the output and
// serializing again reproduces the bytes.
std::string serialize_distribution(const DiscreteCdf& f,
                                   const std::string& format);

// ---- Base-pair files. ----
// {"u0": [[x, y], ...], "v0": [[a, b], ...]} with an optional "continuity"
// object tagging each component "left", "right" or "continuous". The parsed
// knots go through the standard-pair validation, so monotonicity and
// boundary violations surface as the usual errors.
StandardPair parse_pair(const std::string& text);
StandardPair load_pair(const std::string& path);
std::string serialize_pair(const StandardPair& pair);

// ---- Vector files (for the partial-sum commands). ----
// {"samples": [v, ...]} or a single CSV column.
std::vector<double> parse_vector(const std::string& text,
                                 const std::string& format);
std::vector<double> load_vector(const std::string& path);

// ---- Report rendering. ----
// Versioned JSON for an equivalence report; key order and number rendering
// are fixed, so identical reports serialize to identical bytes.
std::string report_to_json(const EquivalenceReport& report);

// ---- Cumulative quantile table. ----
// n_points+1 rows (p, Int_0^p F^{-1}) for p on the uniform grid over [0,1];
// with normalize the integral is divided by the mean (the classical equality
// curve), raising zero_mean_normalize when the mean vanishes. n_points >= 1.
std::vector<std::pair<double, double>> lorenz_table(const DiscreteCdf& f,
                                                    int n_points,
                                                    bool normalize);

}  // namespace stochord

#endif  // STOCHORD_IO_HPP_
