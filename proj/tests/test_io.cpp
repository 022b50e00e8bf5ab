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

#include "stochord/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "stochord/errors.hpp"

namespace stochord {
namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return errc::parse_error;
}

TEST_CASE("json distributions parse") {
  const DiscreteCdf coin =
      parse_distribution(R"({"atoms": [[0, 0.5], [1, 0.5]]})", "json");
  REQUIRE(coin.atoms().size() == 2);
  CHECK(coin.atoms()[0].location == 0.0);
  CHECK(coin.atoms()[1].mass == 0.5);

  SUBCASE("weights are normalized") {
    const DiscreteCdf f =
        parse_distribution(R"({"atoms": [[0, 1], [1, 3]]})", "json");
    CHECK(f.atoms()[0].mass == doctest::Approx(0.25));
    CHECK(f.atoms()[1].mass == doctest::Approx(0.75));
  }
  SUBCASE("duplicate locations merge") {
    const DiscreteCdf f =
        parse_distribution(R"({"atoms": [[1, 0.5], [1, 0.5]]})", "json");
    REQUIRE(f.atoms().size() == 1);
    CHECK(f.atoms()[0].mass == doctest::Approx(1.0));
  }
  SUBCASE("samples get equal weights") {
    const DiscreteCdf f =
        parse_distribution(R"({"samples": [0, 1, 1, 2]})", "json");
    REQUIRE(f.atoms().size() == 3);
    CHECK(f.atoms()[1].mass == doctest::Approx(0.5));
  }
}

TEST_CASE("csv distributions parse") {
  const DiscreteCdf with_header =
      parse_distribution("value,mass\n0,0.5\n1,0.5\n", "csv");
  REQUIRE(with_header.atoms().size() == 2);
  CHECK(with_header.atoms()[1].location == 1.0);

  SUBCASE("headerless two-column rows work too") {
    const DiscreteCdf f = parse_distribution("0,1\n1,3\n", "csv");
    CHECK(f.atoms()[1].mass == doctest::Approx(0.75));
  }
  SUBCASE("single column means samples") {
    const DiscreteCdf f = parse_distribution("0\n1\n1\n2\n", "csv");
    REQUIRE(f.atoms().size() == 3);
    CHECK(f.atoms()[1].mass == doctest::Approx(0.5));
  }
  SUBCASE("windows line endings and blank lines") {
    const DiscreteCdf f = parse_distribution("value,mass\r\n0,0.5\r\n\r\n1,0.5\r\n", "csv");
    REQUIRE(f.atoms().size() == 2);
  }
}

TEST_CASE("serialization round-trips byte for byte") {
  const std::string text = R"({"atoms": [[0, 0.125], [2.5, 0.875]]})";
  const std::string once = serialize_distribution(parse_distribution(text, "json"), "json");
  const std::string twice = serialize_distribution(parse_distribution(once, "json"), "json");
  CHECK(once == twice);

  const std::string csv_once = serialize_distribution(parse_distribution(text, "json"), "csv");
  const std::string csv_twice = serialize_distribution(parse_distribution(csv_once, "csv"), "csv");
  CHECK(csv_once == csv_twice);
  CHECK(csv_once.rfind("value,mass\n", 0) == 0);
}

TEST_CASE("distribution parse failures carry the parse-error code") {
  auto parse = [](const std::string& text, const std::string& format) {
    return [text, format] { parse_distribution(text, format); };
  };
  CHECK(code_of(parse("{nonsense", "json")) == errc::parse_error);
  CHECK(code_of(parse(R"({"atoms": [], "samples": []})", "json")) ==
        errc::parse_error);
  CHECK(code_of(parse(R"({"neither": 1})", "json")) == errc::parse_error);
  CHECK(code_of(parse(R"({"atoms": [[1]]})", "json")) == errc::parse_error);
  CHECK(code_of(parse(R"({"atoms": [[1, "x"]]})", "json")) ==
        errc::parse_error);
  CHECK(code_of(parse("", "csv")) == errc::parse_error);
  CHECK(code_of(parse("a,b,c\n1,2,3\n", "csv")) == errc::parse_error);
  CHECK(code_of(parse("value,mass\n1,2\n3\n", "csv")) == errc::parse_error);
  CHECK(code_of(parse("value,mass\n", "csv")) == errc::parse_error);
  CHECK(code_of(parse("1,1\n", "yaml")) == errc::parse_error);
  // Domain validation still uses the domain codes.
  CHECK(code_of(parse(R"({"atoms": [[0, -1], [1, 2]]})", "json")) ==
        errc::non_positive_mass);
  CHECK(code_of(parse(R"({"samples": []})", "json")) == errc::empty_support);
}

TEST_CASE("pair files parse, validate and round-trip") {
  const StandardPair pair = parse_pair(
      R"({"u0": [[-3, -3], [3, 3]], "v0": [[0, 0], [0.5, 0.25], [1, 1]]})");
  CHECK(pair.u0(0.0) == 0.0);
  CHECK(pair.v0(0.5) == doctest::Approx(0.25));

  const std::string once = serialize_pair(pair);
  const std::string twice = serialize_pair(parse_pair(once));
  CHECK(once == twice);
  CHECK(once.find("continuity") != std::string::npos);

  SUBCASE("validation errors keep their domain codes") {
    auto bad_boundary = [] {
      parse_pair(R"({"u0": [[-1, -1], [1, 1]], "v0": [[0, 0], [1, 0.5]]})");
    };
    CHECK(code_of(bad_boundary) == errc::bad_boundary);
    auto not_increasing = [] {
      parse_pair(R"({"u0": [[-1, 0], [1, 0]], "v0": [[0, 0], [1, 1]]})");
    };
    CHECK(code_of(not_increasing) == errc::not_increasing);
  }
  SUBCASE("missing component is a parse error") {
    auto missing = [] { parse_pair(R"({"u0": [[-1, -1], [1, 1]]})"); };
    CHECK(code_of(missing) == errc::parse_error);
    auto bad_tag = [] {
      parse_pair(
          R"({"u0": [[-1, -1], [1, 1]], "v0": [[0, 0], [1, 1]],
              "continuity": {"v0": "sideways"}})");
    };
    CHECK(code_of(bad_tag) == errc::parse_error);
  }
}

TEST_CASE("vector files parse") {
  const std::vector<double> x = parse_vector(R"({"samples": [3, 1, 2]})", "json");
  REQUIRE(x.size() == 3);
  CHECK(x[0] == 3.0);
  const std::vector<double> y = parse_vector("entries\n3\n1\n2\n", "csv");
  CHECK(y == x);
  auto two_columns = [] { parse_vector("1,2\n", "csv"); };
  CHECK(code_of(two_columns) == errc::parse_error);
  auto not_object = [] { parse_vector("[1, 2]", "json"); };
  CHECK(code_of(not_object) == errc::parse_error);
}

TEST_CASE("files load with format detection") {
  const std::string path = "io_test_tmp_noext";
  {
    std::ofstream out(path);
    out << R"({"samples": [0, 1]})";
  }
  const DiscreteCdf f = load_distribution(path);
  CHECK(f.atoms().size() == 2);
  std::remove(path.c_str());

  const std::string csv_path = "io_test_tmp.csv";
  {
    std::ofstream out(csv_path);
    out << "value,mass\n0,0.5\n1,0.5\n";
  }
  CHECK(load_distribution(csv_path).atoms().size() == 2);
  std::remove(csv_path.c_str());

  auto missing = [] { load_distribution("definitely_not_here.json"); };
  CHECK(code_of(missing) == errc::parse_error);
}

TEST_CASE("equivalence reports render as versioned, deterministic JSON") {
  InstanceSpec spec;
  spec.seed = 5;
  spec.trials = 10;
  const EquivalenceReport report = run_equivalence_suite(spec, "L1");
  const std::string a = report_to_json(report);
  const std::string b = report_to_json(run_equivalence_suite(spec, "L1"));
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": 1") != std::string::npos);
  CHECK(a.find("\"theorem\": \"L1\"") != std::string::npos);
  CHECK(a.find("\"hard_failures\": 0") != std::string::npos);

  SUBCASE("counterexamples serialize clause by clause") {
    EquivalenceReport fake;
    fake.theorem = "T1";
    fake.trials = 1;
    fake.agreements = 0;
    fake.counterexamples.push_back(
        {0, false, "F1=[(0,1)] F2=[(1,1)]", {{"cumulative cdf side", true, 0.5},
                                             {"rank rays", false, -0.25}}});
    const std::string text = report_to_json(fake);
    CHECK(text.find("\"instance\": \"F1=[(0,1)] F2=[(1,1)]\"") !=
          std::string::npos);
    CHECK(text.find("\"clause\": \"rank rays\"") != std::string::npos);
    CHECK(text.find("\"margin\": -0.25") != std::string::npos);
    CHECK(text.find("\"hard_failures\": 1") != std::string::npos);
  }
}

TEST_CASE("cumulative quantile table") {
  const DiscreteCdf coin =
      parse_distribution(R"({"atoms": [[0, 0.5], [1, 0.5]]})", "json");
  const auto rows = lorenz_table(coin, 2, false);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::pair<double, double>{0.0, 0.0});
  CHECK(rows[1].first == doctest::Approx(0.5));
  CHECK(rows[1].second == doctest::Approx(0.0));
  CHECK(rows[2].second == doctest::Approx(0.5));

  SUBCASE("normalization lands at one") {
    const auto norm = lorenz_table(coin, 2, true);
    CHECK(norm[2].second == doctest::Approx(1.0));
  }
  SUBCASE("degenerate distribution gives the diagonal when normalized") {
    const DiscreteCdf point =
        parse_distribution(R"({"atoms": [[2, 1]]})", "json");
    const auto rows4 = lorenz_table(point, 4, true);
    for (const auto& [p, value] : rows4) CHECK(value == doctest::Approx(p));
  }
  SUBCASE("zero mean cannot be normalized") {
    const DiscreteCdf sym =
        parse_distribution(R"({"atoms": [[-1, 0.5], [1, 0.5]]})", "json");
    auto normalize = [&] { lorenz_table(sym, 2, true); };
    CHECK(code_of(normalize) == errc::zero_mean_normalize);
    CHECK(lorenz_table(sym, 2, false)[2].second == doctest::Approx(0.0));
  }
  SUBCASE("row count is validated") {
    auto no_rows = [&] { lorenz_table(coin, 0, false); };
    CHECK(code_of(no_rows) == errc::bad_params);
  }
}

}  // namespace
}  // namespace stochord
