#include "doctest.h"

#include "generators.hpp"
#include "multifan/cli.hpp"
#include "multifan/document.hpp"
#include "multifan/error.hpp"
#include "multifan/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace multifan;
namespace fx = multifan::fixtures;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MULTIFAN_DATA_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  for (const auto& name : io::fixture_names()) {
    const auto text = io::serialize(io::fixture(name));
    CHECK(io::serialize(io::parse_document(text)) == text);
  }
  CHECK(read_file(data("p2.fan")) == io::serialize(fx::p2()));
  CHECK(read_file(data("star.fan")) == io::serialize(fx::star()));
  CHECK_THROWS_AS(io::fixture("nonesuch"), Error);
}

TEST_CASE("parsing") {
  auto ex = io::parse_document(read_file(data("ex24.fan")));
  std::vector<std::int64_t> nets;
  for (const auto& c : ex.fan.top_cones()) nets.push_back(c.weight.net());
  CHECK(nets == std::vector<std::int64_t>{2, 1, 1, -1});
  CHECK_FALSE(ex.is_polytope());

  // Dependent rays parse but do not validate.
  auto dep = io::parse_document(R"({"dim": 2, "rays": [[1, 0], [2, 0]], "cones": [{"set": [2, 1], "w_plus": 1, "w_minus": 0}]})");
  CHECK_FALSE(validate(dep.fan).valid);
  CHECK(dep.fan.top_cones().front().face == Face{0, 1});

  auto poly = io::parse_document(R"({"dim": 1, "rays": [[1], [-1]], "cones": [{"set": [1]}, {"set": [2]}],
                                     "support": ["6/4", 2]})");
  REQUIRE(poly.is_polytope());
  CHECK((*poly.support)[0] == Rat(3, 2));
  CHECK(io::serialize(poly).find("\"3/2\", \"2\"") != std::string::npos);

  for (const char* bad : {"", "[1]", "{\"dim\": 2}", R"({"dim": 1, "rays": [[1, 2]], "cones": []})",
                          R"({"dim": 1, "rays": [[1]], "cones": [{"set": [3]}]})",
                          R"({"dim": 1, "rays": [[1]], "cones": [{"set": [1]}, {"set": [1]}]})",
                          R"({"dim": 1, "rays": [[1]], "cones": [{"set": [1]}], "support": ["x"]})"}) {
    CAPTURE(bad);
    try {
      io::parse_document(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse_error);
    }
  }
}

TEST_CASE("property: canonicalization is idempotent") {
  Rng rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = gen::random_polytope(rng, 1 + trial % 3, 2);
    const auto once = io::serialize(p);
    const auto doc = io::parse_document(once);
    CHECK(io::serialize(doc) == once);
    CHECK(doc.fan.rays() == p.fan().rays());
    CHECK(*doc.support == p.support());
  }
}

TEST_CASE("grid export") {
  auto star = fx::star_polytope();
  Rng rng(3);
  const auto v = to_rat(choose_generic(star.fan(), rng));
  const auto rows = io::grid(star, Rat(1, 4), Shift::exact, v);
  int checked = 0;
  for (std::size_t k = 0; k < rows.size() && checked < 10; k += rows.size() / 10, ++checked)
    CHECK(rows[k].dh == wn_eval(star, {rows[k].x, rows[k].y}, Shift::exact, rng));
  CHECK(checked == 10);
  bool centre = false;
  for (const auto& r : rows)
    if (r.x == Rat(1, 4) && r.y == Rat(1, 4)) centre = r.dh == 2;
  CHECK(centre);
  CHECK(io::grid_csv(rows).rfind("x,y,dh\n", 0) == 0);

  auto sq = io::grid(fx::unit_square(), Rat(1, 2), Shift::exact, {3, 1});
  for (const auto& r : sq) CHECK(r.dh == (r.x == Rat(1, 2) && r.y == Rat(1, 2) ? 1 : 0));

  MultiPolytope broken(fx::ex24(), std::vector<Rat>(5, Rat(1)));
  CHECK_THROWS_AS(io::grid(broken, Rat(1, 2), Shift::exact, {3, 1}), Error);
}

TEST_CASE("command line reports") {
  CHECK(run_cli({"degree", data("star.fan")}).out == "degree: 2\n");
  CHECK(run_cli({"count", data("p2-triangle.poly")}).out == "count: 10\n");
  CHECK(run_cli({"complete", data("ex24.fan")}).out == "precomplete: true\ndegree: 1\ncomplete: false\n");
  CHECK(run_cli({"tygenus", data("p2.fan")}).out == "ty: 1 - y + y^2\ncoefficients: 1 -1 1\n");
  CHECK(run_cli({"ehrhart", data("p2-triangle.poly")}).out == "ehrhart: 9/2 nu^2 + 9/2 nu + 1\ncoefficients: 1 9/2 9/2\n");
  CHECK(run_cli({"volume", data("p112-triangle.poly")}).out == "volume: 4\n");
  CHECK(run_cli({"interior", data("unit-square.poly"), "--format", "json"}).out == "{\n  \"interior\": 0\n}\n");
  CHECK(run_cli({"dh", data("star-polytope.poly"), "--point", "0,0"}).out == "dh: 2\n");
  CHECK(run_cli({"dh", data("unit-square.poly"), "--point", "1,1", "--shift", "plus"}).out == "dh: 1\n");
  CHECK(run_cli({"example", "square"}).out == read_file(data("unit-square.poly")));

  auto wall = run_cli({"wallcheck", data("star-polytope.poly"), "--from", "1/2,2/3", "--to", "3/2,2/3", "--wall", "1"});
  CHECK(wall.status == 0);
  CHECK(wall.out.find("holds: true") != std::string::npos);

  // Deterministic given the seed.
  auto a = run_cli({"hvector", data("star.fan"), "--seed", "9"});
  CHECK(a.out == run_cli({"hvector", data("star.fan"), "--seed", "9"}).out);
  CHECK(run_cli({"hvector", data("star.fan"), "--generic-v", "1,0"}).status == 3);
}

TEST_CASE("command line failures") {
  auto usage = run_cli({"frobnicate", data("p2.fan")});
  CHECK(usage.status == 1);
  auto missing = run_cli({"degree", data("nonexistent.fan")});
  CHECK(missing.status == 2);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
  CHECK(run_cli({"count", data("star.fan")}).status == 2);
  CHECK(run_cli({"degree", data("ex24.fan")}).status == 0);
  const auto path = std::filesystem::temp_directory_path() / "multifan-ex24.poly";
  {
    std::ofstream f(path);
    f << io::serialize(MultiPolytope(fx::ex24(), std::vector<Rat>(5, Rat(1))));
  }
  auto incomplete = run_cli({"count", path.string()});
  CHECK(incomplete.status == 3);
  CHECK(incomplete.err.find("not complete") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run_cli({"example", "nope"}).err.find("available") != std::string::npos);
}
