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

#ifndef STOCHORD_ERRORS_HPP_
#define STOCHORD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stochord {

// Every failure mode raised by the library. Code paths that catch errors
// dispatch on the code, not on the message text.
enum class errc {
  empty_support,
  non_positive_mass,
  mass_not_normalized,
  alpha_out_of_range,
  non_finite_integral,
  evaluation_gap,
  continuity_mismatch,
  not_a_compatible_pair,
  not_increasing,
  not_monotone,
  bad_boundary,
  wrong_monotonicity,
  unbounded_generator,
  degenerate_base,
  cut_out_of_range,
  unknown_name,
  length_mismatch,
  non_positive_entry_for_log,
  rho_out_of_range,
  internal_identity_violation,
  unknown_theorem,
  scan_too_large,
  zero_mean_normalize,
  bad_params,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace stochord

#endif  // STOCHORD_ERRORS_HPP_
