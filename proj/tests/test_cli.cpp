// Copyright 2026 The liaison Authors
//
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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "liaison/io.hpp"

using namespace liaison;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("liaison_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

BettiDiagram from_json(const nlohmann::json& j) {
  BettiDiagram d;
  for (const auto& e : j.at("entries")) d.add(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
  return d;
}

}  // namespace

TEST_CASE("rendering Betti tables") {
  const std::vector<int> two{2, 2};
  CHECK(render_betti(koszul_diagram(two)) == "1 2 1\n1 -- --\n-- 2 --\n-- -- 1\n");
  CHECK(render_betti(BettiDiagram::cyclic()) == "1\n1\n");
  CHECK(render_betti(BettiDiagram{}).empty());

  const std::vector<int> x_type{2, 2, 6}, z_type{1, 1, 6};
  const auto cone = mapping_cone_diagram(koszul_diagram(x_type), koszul_diagram(z_type), 10);
  CHECK(render_betti(cone) ==
        "1 4 6 3\n"
        "1 -- -- --\n"
        "-- 3 2 1\n"
        "-- -- 1 --\n"
        "-- -- -- --\n"
        "-- -- -- --\n"
        "-- 1 -- --\n"
        "-- -- 3 2\n");
  CHECK(render_betti_raw(koszul_diagram(two)) == "0 0 1\n1 2 2\n2 4 1\n");
}

TEST_CASE("parsing ideal files") {
  const auto f = parse_ideal_file("ring 32003 4\nideal x0^2, x1^2, x2^6\n");
  CHECK(f.ring.prime() == 32003);
  CHECK(f.ring.nvars == 4);
  REQUIRE(f.generators.size() == 3);
  CHECK(f.generators[2].degree() == 6);

  const auto g = parse_ideal_file("# the line x = 0 with an embedded point\nring 32003 2\nideal x0^2, x0*x1\n");
  CHECK(g.generators.size() == 2);

  const auto h = parse_ideal_file("ring 7 3\nideal 3x0x1 - x2^2 + 10*x0 x2,\n   -x1^3 # wrapped\n");
  CHECK(to_string(h.generators[0]) == "3*x0*x1 + 3*x0*x2 - x2^2");
  CHECK(to_string(h.generators[1]) == "-x1^3");
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_ideal_file(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("ring 4 2\nideal x0") == std::pair{1, 6});
  CHECK(error_at("ring 5 2\nideal x0^2 + x1") == std::pair{2, 7});
  CHECK(error_at("ring 5 2\nideal x0, x0*x7") == std::pair{2, 14});
  CHECK(error_at("ring 5 2\nideal y0") == std::pair{2, 7});
  CHECK(error_at("ring 5 2\nideal x0,") == std::pair{2, 10});
  CHECK(error_at("ideal x0") == std::pair{1, 1});
  CHECK(error_at("ring 5 0\nideal x0") == std::pair{1, 8});
}

TEST_CASE("format and parse round trip") {
  const auto f = parse_ideal_file("ring 101 3\nideal x2^2 - 5x0x1 + x1^2, x0^3 - x1 x2^2\n");
  const auto text = format_ideal_file(f.ring, f.generators);
  const auto g = parse_ideal_file(text);
  CHECK(g.ring == f.ring);
  CHECK(g.generators == f.generators);
}

TEST_CASE("ideal commands") {
  const TempFile y("ring 32003 3\nideal x0^2, x0*x1, x1^2, x2^6\n");
  const auto degree = run({"degree", y.path()});
  CHECK(degree.code == 0);
  CHECK(degree.out.find("degree 18\n") != std::string::npos);

  const auto gb = run({"gb", y.path()});
  CHECK(gb.code == 0);
  CHECK(gb.out.find("x0*x1\n") != std::string::npos);

  const auto betti = run({"betti", y.path()});
  CHECK(betti.out.rfind("1 4 5 2\n", 0) == 0);

  const auto res = run({"res", y.path(), "--nonminimal"});
  CHECK(res.code == 0);
  CHECK(res.out.find("ranks 1 ") != std::string::npos);

  const TempFile bad("ring 4 2\nideal x0\n");
  const auto parse = run({"gb", bad.path()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find(":1:6:") != std::string::npos);
  CHECK(run({"gb", "/nonexistent/ideal.txt"}).code == 2);
}

TEST_CASE("JSON reports") {
  const TempFile y("ring 32003 3\nideal x0^2, x0*x1, x1^2, x2^6\n");
  const auto r = run({"--json", "betti", y.path()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("exit") == 0);
  const auto& diagram = j.at("result").at("diagram");
  CHECK(render_betti(from_json(diagram)) == diagram.at("table").get<std::string>());

  const auto link = run({"link", "--ci", "2,2,6", "--collinear-t", "6", "--seed", "1", "--json"});
  REQUIRE(link.code == 0);
  const auto lj = nlohmann::json::parse(link.out);
  CHECK(lj.at("result").at("degree") == 18);
  CHECK(lj.at("result").at("matched_scenario") == "lower:case2/upper:case1");
  CHECK(lj.at("result").at("nonminimal").at("totals") == std::vector<int>{1, 4, 6, 3});
  CHECK(lj.at("result").at("verdict").at("holds") == true);
}

TEST_CASE("link and sweep commands") {
  const auto link = run({"link", "--ci", "2,2,6", "--collinear-t", "6"});
  CHECK(link.code == 0);
  CHECK(link.out.find("matched lower:case2/upper:case1") != std::string::npos);
  CHECK(link.out.find("verdict 9 <= 18 <= 72 holds") != std::string::npos);

  CHECK(run({"link", "--ci", "2,2,2", "--three-points"}).code == 0);
  CHECK(run({"link", "--ci", "2,2,2", "--sub-ci", "1,1,2"}).code == 0);
  CHECK(run({"link", "--ci", "2,2,2", "--three-points", "--collinear-t", "1"}).code == 2);
  CHECK(run({"link", "--ci", "2,2,2"}).code == 2);
  CHECK(run({"link", "--ci", "2,x,2", "--three-points"}).code == 2);
  CHECK(run({"link", "--ci", "2,2,2", "--three-points", "--prime", "9"}).code == 2);

  const auto verify = run({"verify", "lemmas", "--n", "3..5", "--dmax", "6"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("violations 0\n") != std::string::npos);
  CHECK(verify.out.find("lemma/even d=2,2,2 t=0 48 <= 48") != std::string::npos);

  const auto cross = run({"crosscheck", "collinear", "--n", "3", "--dmax", "2"});
  CHECK(cross.code == 0);
  CHECK(cross.out.find("oracle runs 2 ") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "collinear", "--bogus"}).code == 2);
  CHECK(run({"verify", "four-points"}).code == 2);
  CHECK(run({"verify", "collinear", "--n", "2..3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
