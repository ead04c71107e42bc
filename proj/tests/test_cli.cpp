#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "matchfield/json_io.hpp"

using namespace matchfield;
using json_io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "matchfield");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json round trips") {
  const MatchingField f = block_diagonal(3, 5);
  CHECK(json_io::matching_field_from_json(json_io::to_json(f)) == f);
  const WeightMatrix m = fflv_weight_matrix(2, 4, Rational(7, 2));
  CHECK(json_io::weight_matrix_from_json(json_io::to_json(m)) == m);
  const LatticePolytope p = polytope_of_field(f);
  CHECK(equal_vertex_sets(json_io::polytope_from_json(json_io::to_json(p)), p));
  CHECK(json_io::to_json(Rational(-4, 6)) == "-2/3");
  CHECK(json_io::rational_from_json(Json(5)) == 5);
  CHECK_THROWS(json_io::rational_from_json(Json(1.5)));
}

TEST_CASE("cli field and coherence") {
  auto r = call({"field", "--family", "diagonal", "--k", "2", "--n", "3", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["tuples"].size() == 3);
  CHECK(j["weights"][1][0] == "2");

  auto c = call({"coherence", "--tuples", "[[1,2],[2,3],[3,1]]"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["coherent"] == false);
  auto d = call({"coherence", "--family", "intermediate", "--k", "3", "--n", "6", "--index", "5"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["coherent"] == true);
  CHECK(Json::parse(d.out)["witness_reinduces"] == true);
}

TEST_CASE("cli verify") {
  auto r = call({"verify", "--k", "3", "--n", "6", "--ehrhart-depth", "2", "--equivalences"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["steps"].size() == 9);
  CHECK(j["passed"] == true);
  CHECK(j["lattice_points"][1]["counts"][0] == 175);
  for (const auto& s : j["steps"]) CHECK(s["passed"] == true);
  auto again = call({"verify", "--k", "3", "--n", "6", "--ehrhart-depth", "2", "--equivalences"});
  CHECK(again.out == r.out);
  auto csv = call({"verify", "--k", "2", "--n", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("index,triple,bijection,before,after,passed\n", 0) == 0);
}

TEST_CASE("cli mutate, poset, polytope, ehrhart, pluecker") {
  auto m = call({"mutate", "--k", "3", "--n", "6", "--step", "1", "--witnesses"});
  REQUIRE(m.code == 0);
  const Json mj = Json::parse(m.out);
  CHECK(mj["triple"] == Json::array({3, 1, 4}));
  CHECK(mj["report"]["before"].contains("witnesses"));

  auto hex = call({"mutate", "--w", "[1,1]", "--factor", "[[0,0],[1,-1]]", "--points",
                   "[[1,0],[0,1],[1,1],[-1,0],[0,-1],[-1,-1]]"});
  REQUIRE(hex.code == 0);
  CHECK(Json::parse(hex.out)["vertices"].size() == 5);

  auto p = call({"poset", "--k", "3", "--n", "7", "--filter", "[[3,2],[3,3],[3,4],[2,4],[1,4]]"});
  REQUIRE(p.code == 0);
  const Json pj = Json::parse(p.out);
  CHECK(pj["min_elements"] == Json::parse("[[1,4],[3,2]]"));
  CHECK(pj["subset"] == Json::parse("[2,3,6]"));
  CHECK(pj["filters"] == 35);

  auto poly = call({"polytope", "--family", "fflv", "--k", "3", "--n", "6", "--lattice-points", "2", "--check-extremal"});
  REQUIRE(poly.code == 0);
  CHECK(Json::parse(poly.out)["lattice_points"]["count"] == 175);
  CHECK(Json::parse(poly.out)["all_extremal"] == true);
  auto gt = call({"polytope", "--map", "gt", "--k", "2", "--n", "5"});
  CHECK(gt.code == 0);
  CHECK(Json::parse(gt.out)["report"]["passed"] == true);

  auto e = call({"ehrhart", "--poset", "order", "--k", "2", "--n", "4"});
  REQUIRE(e.code == 0);
  CHECK(Json::parse(e.out)["counts"] == Json::parse("[1,6,20,50,105]"));

  auto pl = call({"pluecker", "--k", "2", "--n", "4", "--weights", "diagonal"});
  REQUIRE(pl.code == 0);
  const Json plj = Json::parse(pl.out);
  CHECK(plj["relations"][0]["initial_form"]["text"] == "-P13*P24 + P14*P23");
  CHECK(plj["relations"][0]["initial_form"]["binomial"] == true);
  CHECK(plj["vanishing_check"]["failures"] == 0);
  auto pi = call({"pluecker", "--k", "3", "--n", "6", "--weights", "intermediate:9", "--seed", "3"});
  CHECK(pi.code == 0);
  CHECK(Json::parse(pi.out)["vanishing_check"]["seed"] == 3);
}

TEST_CASE("cli exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"nosuch"}).code == 2);
  CHECK(call({"field", "--family", "diagonal"}).code == 2);
  CHECK(call({"field", "--family", "weird", "--k", "2", "--n", "4"}).code == 2);
  CHECK(call({"verify", "--k", "1", "--n", "4"}).code == 2);
  CHECK(call({"coherence", "--tuples", "[[1,2],[2,1],[1,3]]"}).code == 2);
  CHECK(call({"field", "--weights", "[[0,0,0],[0,0,0]]"}).code == 1);
  CHECK(call({"polytope", "--family", "diagonal", "--k", "3", "--n", "6", "--lattice-points", "2",
              "--max-candidates", "50"})
            .code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli writes --out files") {
  const auto path = std::filesystem::temp_directory_path() / "matchfield_cli_out.json";
  auto r = call({"field", "--family", "fflv", "--k", "2", "--n", "4", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["k"] == 2);
  std::filesystem::remove(path);
}
