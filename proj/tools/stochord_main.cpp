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

// Command-line frontend. Exit codes are the machine contract:
//   0  the ordering/relation holds, or the command succeeded
//   1  the ordering/relation fails, or verification found hard disagreements
//   2  input error (parse failures, unknown names, bad parameters)

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stochord/discrete_cdf.hpp"
#include "stochord/distortion.hpp"
#include "stochord/dualcheck.hpp"
#include "stochord/errors.hpp"
#include "stochord/io.hpp"
#include "stochord/majorize.hpp"
#include "stochord/ordering.hpp"
#include "stochord/tolerance.hpp"
#include "stochord/welfare.hpp"

namespace {

using namespace stochord;

std::string upper_copy(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

StandardPair identity_pair_over(const DiscreteCdf& f1, const DiscreteCdf& f2) {
  const Support s1 = f1.support();
  const Support s2 = f2.support();
  const double lo = std::min(s1.min_loc, s2.min_loc) - 1.0;
  const double hi = std::max(s1.max_loc, s2.max_loc) + 1.0;
  return identity_pair(lo, hi);
}

void print_verdict(const std::string& order, const OrderingVerdict& v) {
  std::printf("order: %s\n", order.c_str());
  std::printf("clause: %s\n", v.statement.c_str());
  std::printf("holds: %s\n", v.holds ? "true" : "false");
  std::printf("margin: %.12g\n", v.margin);
  if (v.witness)
    std::printf("witness: at=%.12g lhs=%.12g rhs=%.12g\n", v.witness->at,
                v.witness->lhs, v.witness->rhs);
}

struct CheckArgs {
  std::string order;
  std::string dist1;
  std::string dist2;
  std::string pair_file;
};

int run_check(const CheckArgs& args) {
  const DiscreteCdf f1 = load_distribution(args.dist1);
  const DiscreteCdf f2 = load_distribution(args.dist2);
  const std::string name = upper_copy(args.order);
  OrderingVerdict v;
  if (name == "UPPER" || name == "LOWER" || name == "DOUBLE") {
    const StandardPair pair = args.pair_file.empty()
                                  ? identity_pair_over(f1, f2)
                                  : load_pair(args.pair_file);
    if (name == "UPPER")
      v = upper_ordering(pair, f1, f2);
    else if (name == "LOWER")
      v = lower_ordering(pair, f1, f2);
    else
      v = double_ordering(pair, f1, f2);
  } else {
    if (!args.pair_file.empty())
      std::cerr << "note: --pair is ignored for the classical ordering "
                << name << "\n";
    v = classic(name, f1, f2);
  }
  print_verdict(name, v);
  return v.holds ? 0 : 1;
}

struct LorenzArgs {
  std::string dist;
  int points = 100;
  bool normalize = false;
};

int run_lorenz(const LorenzArgs& args) {
  const DiscreteCdf f = load_distribution(args.dist);
  std::printf("p,cumulative\n");
  for (const auto& [p, value] : lorenz_table(f, args.points, args.normalize))
    std::printf("%.12g,%.12g\n", p, value);
  return 0;
}

struct WelfareArgs {
  std::string functional;
  std::string dist;
  std::string pair_file;
  double rho = 2.0;
  int grid_size = 1001;
};

int run_welfare(const WelfareArgs& args) {
  const DiscreteCdf f = load_distribution(args.dist);
  std::string which = args.functional;
  for (char& c : which) c = static_cast<char>(std::tolower(c));
  if (which == "mean") {
    std::printf("mean: %.12g\n", f.mean());
    return 0;
  }
  if (which == "sgini") {
    const Perception f0 = s_gini_perception(args.rho, args.grid_size);
    const YaariForms forms = yaari_forms(f0, f);
    std::printf("sgini(rho=%.12g): %.12g\n", args.rho, yaari(f0, f));
    std::printf("cross-check residual: %.3g\n",
                std::fabs(forms.cdf_form - forms.quantile_form));
    return 0;
  }
  // yaari and rdeu read the perception (and for rdeu the utility) from the
  // pair file; with no file both default to the identity.
  Perception f0 = identity_perception();
  MonotonePL u0 = MonotonePL::identity(f.support().min_loc - 1.0,
                                       f.support().max_loc + 1.0);
  if (!args.pair_file.empty()) {
    StandardPair pair = load_pair(args.pair_file);
    f0 = make_perception(pair.v0, "from file");
    u0 = pair.u0;
  }
  if (which == "yaari") {
    const YaariForms forms = yaari_forms(f0, f);
    std::printf("yaari: %.12g\n", yaari(f0, f));
    std::printf("cross-check residual: %.3g\n",
                std::fabs(forms.cdf_form - forms.quantile_form));
    return 0;
  }
  if (which == "rdeu") {
    std::printf("rdeu: %.12g\n", rdeu(u0, f0, f));
    return 0;
  }
  throw Error(errc::unknown_name,
              "unknown functional \"" + args.functional +
                  "\"; expected mean, yaari, rdeu or sgini");
}

struct MajorizeArgs {
  std::string kind;
  std::string x_file;
  std::string y_file;
};

int run_majorize(const MajorizeArgs& args) {
  const std::vector<double> x = load_vector(args.x_file);
  const std::vector<double> y = load_vector(args.y_file);
  std::string kind = args.kind;
  for (char& c : kind) c = static_cast<char>(std::tolower(c));
  MajorKind k;
  if (kind == "strong")
    k = MajorKind::kStrong;
  else if (kind == "weak_lower")
    k = MajorKind::kWeakLower;
  else if (kind == "weak_upper")
    k = MajorKind::kWeakUpper;
  else if (kind == "log")
    k = MajorKind::kLog;
  else
    throw Error(errc::unknown_name,
                "unknown relation \"" + args.kind +
                    "\"; expected strong, weak_lower, weak_upper or log");
  const MajorizationVerdict v = majorizes(x, y, k);
  std::printf("relation: %s\n", kind.c_str());
  std::printf("holds: %s\n", v.holds ? "true" : "false");
  std::printf("margin: %.12g\n", v.margin);
  if (v.witness_k)
    std::printf("witness: first violated partial-sum index k=%zu\n",
                *v.witness_k);
  return v.holds ? 0 : 1;
}

struct VerifyArgs {
  std::string theorem;
  int trials = 1000;
  std::uint64_t seed = 1;
  int atoms = 10;
  int knots = 5;
  std::vector<double> range = {-5.0, 5.0};
  bool exhaustive = false;
  int n = 3;
  std::vector<double> grid = {0.0, 1.0, 2.0};
};

int run_verify(const VerifyArgs& args) {
  EquivalenceReport report;
  if (args.exhaustive) {
    report = exhaustive_small_scan(args.theorem, args.n, args.grid);
  } else {
    InstanceSpec spec;
    spec.seed = args.seed;
    spec.trials = args.trials;
    spec.n_atoms_max = args.atoms;
    spec.n_knots_max = args.knots;
    spec.value_range = {args.range[0], args.range[1]};
    report = run_equivalence_suite(spec, args.theorem);
  }
  std::fputs(report_to_json(report).c_str(), stdout);
  return report.hard_failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "stochord: decide generalized stochastic orderings between finite "
      "discrete distributions"};
  app.require_subcommand(1);
  double eps_flag = 0.0;
  auto* eps_opt = app.add_option(
      "--eps", eps_flag,
      "decision tolerance (default 1e-9; env STOCHORD_EPS also honored)");

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "decide an ordering between two distributions");
  check
      ->add_option("order", check_args.order,
                   "fsd, ssd, icv, icx, lorenz_weak, lorenz_upper, or "
                   "upper/lower/double (generalized; see --pair)")
      ->required();
  check->add_option("dist1", check_args.dist1, "first distribution file")
      ->required();
  check->add_option("dist2", check_args.dist2, "second distribution file")
      ->required();
  check->add_option("--pair", check_args.pair_file,
                    "base-pair file for upper/lower/double (defaults to the "
                    "identity pair over both supports)");

  LorenzArgs lorenz_args;
  auto* lorenz = app.add_subcommand(
      "lorenz", "emit the cumulative quantile table of a distribution");
  lorenz->add_option("dist", lorenz_args.dist, "distribution file")->required();
  lorenz->add_option("--points", lorenz_args.points,
                     "number of grid steps (rows = points + 1)");
  lorenz->add_flag("--normalize", lorenz_args.normalize,
                   "divide by the mean (classical equality curve)");

  WelfareArgs welfare_args;
  auto* welfare = app.add_subcommand(
      "welfare", "evaluate a welfare functional of a distribution");
  welfare
      ->add_option("functional", welfare_args.functional,
                   "mean, yaari, rdeu or sgini")
      ->required();
  welfare->add_option("dist", welfare_args.dist, "distribution file")
      ->required();
  welfare->add_option("--pair", welfare_args.pair_file,
                      "base-pair file supplying the perception (v0) and, for "
                      "rdeu, the utility (u0)");
  welfare->add_option("--rho", welfare_args.rho,
                      "inequality aversion for sgini (> 1)");
  welfare->add_option("--grid-size", welfare_args.grid_size,
                      "piecewise-linear grid for the sgini perception");

  MajorizeArgs majorize_args;
  auto* majorize_cmd = app.add_subcommand(
      "majorize", "decide a partial-sum relation between two vectors");
  majorize_cmd
      ->add_option("kind", majorize_args.kind,
                   "strong, weak_lower, weak_upper or log")
      ->required();
  majorize_cmd->add_option("x", majorize_args.x_file, "first vector file")
      ->required();
  majorize_cmd->add_option("y", majorize_args.y_file, "second vector file")
      ->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "run an equivalence suite and print the JSON report");
  verify
      ->add_option("theorem", verify_args.theorem,
                   "suite id: T1, T1-star, T2, T3, L1, L3, EQ1, COR1, COR2, "
                   "MAJ")
      ->required();
  verify->add_option("--trials", verify_args.trials, "randomized trial count");
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--atoms", verify_args.atoms,
                     "max atoms per sampled distribution");
  verify->add_option("--knots", verify_args.knots,
                     "max knots per sampled base function");
  verify
      ->add_option("--range", verify_args.range,
                   "sampling range lo,hi for values")
      ->delimiter(',')
      ->expected(2);
  verify->add_flag("--exhaustive", verify_args.exhaustive,
                   "enumerate uniform laws on n-vectors over --grid instead "
                   "of sampling");
  verify->add_option("--n", verify_args.n, "vector length for --exhaustive");
  verify->add_option("--grid", verify_args.grid, "grid values a,b,c,...")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (const char* env = std::getenv("STOCHORD_EPS")) {
      char* end = nullptr;
      const double eps = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(eps > 0.0) || !std::isfinite(eps))
        throw Error(errc::bad_params,
                    "STOCHORD_EPS must be a positive number");
      set_default_eps(eps);
    }
    if (eps_opt->count() > 0) {
      if (!(eps_flag > 0.0) || !std::isfinite(eps_flag))
        throw Error(errc::bad_params, "--eps must be a positive number");
      set_default_eps(eps_flag);
    }
    if (check->parsed()) return run_check(check_args);
    if (lorenz->parsed()) return run_lorenz(lorenz_args);
    if (welfare->parsed()) return run_welfare(welfare_args);
    if (majorize_cmd->parsed()) return run_majorize(majorize_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
