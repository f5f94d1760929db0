#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mapperforge/cli.hpp"
#include "mapperforge/errors.hpp"
#include "mapperforge/geometry.hpp"
#include "mapperforge/io.hpp"

using namespace mapperforge;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) {
    dir = fs::temp_directory_path() / ("mapperforge_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& f) const { return (dir / f).string(); }
  void put(const std::string& f, const std::string& content) const {
    std::ofstream out(path(f), std::ios::binary);
    out << content;
  }
  std::string get(const std::string& f) const { return read_file(path(f)); }
  bool has(const std::string& f) const { return fs::exists(dir / f); }
};

// Capture stdout while running the CLI in-process.
int run_captured(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int code = run_cli(args);
  std::cout.rdbuf(old);
  if (out) *out = captured.str();
  return code;
}

const char* kCirclePoints =
    "id,x0,x1\n0,0,-5\n1,3,-4\n2,5,-1\n3,5,1\n4,3,4\n5,0,5\n6,-3,4\n7,-5,1\n8,-5,-1\n9,-3,-4\n";

const char* kHeightLens = R"({"kind":"coordinate-projection","axis":1})";

const char* kIntervalCover = R"([
  {"shape":"interval","min":"-6","max":"-3"},
  {"shape":"interval","min":"-4","max":"1"},
  {"shape":"interval","min":"0","max":"4"},
  {"shape":"interval","min":"3","max":"6"}
])";

// Triangle with a tail and an isolated vertex: 7 vertices, 6 edges.
const char* kGraphJson = R"({"faces":[[0,1],[1,2],[0,2],[2,3],[3,4],[4,5],[6]]})";

std::string ids_csv(int n) {
  std::string csv = "id,x0\n";
  for (int i = 0; i < n; ++i) csv += std::to_string(i) + "," + std::to_string(i) + "\n";
  return csv;
}

} // namespace

TEST_CASE("cli mapper on the circle fixture") {
  Scratch s("mapper");
  s.put("points.csv", kCirclePoints);
  s.put("lens.json", kHeightLens);
  s.put("cover.json", kIntervalCover);
  int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                           s.path("lens.json"), "--cover", s.path("cover.json"), "--clustering",
                           "single-linkage", "--epsilon", "4", "--out-dir", s.dir.string()});
  CHECK(code == 0);
  CHECK(s.has("mapper_output.json"));
  CHECK(s.has("mapper_output.dot"));
  CHECK(s.has("manifest.json"));
  Json out = Json::parse(s.get("mapper_output.json"));
  CHECK(out.at("provenance").size() == 6);
  // The DOT labels list member point ids.
  std::string dot = s.get("mapper_output.dot");
  CHECK(dot.find("label=\"U0: 0,1,9\"") != std::string::npos);
}

TEST_CASE("cli mapper with an empty cover emits an empty graph") {
  Scratch s("mapper_empty");
  s.put("points.csv", kCirclePoints);
  s.put("lens.json", kHeightLens);
  s.put("cover.json", "[]");
  int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                           s.path("lens.json"), "--cover", s.path("cover.json"), "--out-dir",
                           s.dir.string()});
  CHECK(code == 0);
  Json out = Json::parse(s.get("mapper_output.json"));
  CHECK(out.at("provenance").empty());
  CHECK(out.at("complex").at("faces").empty());
}

TEST_CASE("cli mapper exits 2 when the lens misses a point") {
  Scratch s("mapper_missing");
  s.put("points.csv", "id,x0\n0,1\n7,2\n");
  s.put("lens.json", R"({"kind":"table-to-point","table":{"0":["1"]}})");
  s.put("cover.json", R"([{"shape":"interval","min":"0","max":"9"}])");
  int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                           s.path("lens.json"), "--cover", s.path("cover.json"), "--out-dir",
                           s.dir.string()});
  CHECK(code == 2);
}

TEST_CASE("cli mapper exits 3 on incompatible lens/cover") {
  Scratch s("mapper_incompat");
  s.put("points.csv", "id,x0\n0,1\n");
  s.put("lens.json", R"({"kind":"coordinate-projection","axis":0})");
  s.put("cover.json", R"([{"shape":"star","vertex":0}])");
  int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                           s.path("lens.json"), "--cover", s.path("cover.json"), "--out-dir",
                           s.dir.string()});
  CHECK(code == 3);
}

TEST_CASE("cli inverse star writes artifacts that replay cleanly") {
  Scratch s("inverse_star");
  s.put("k.json", kGraphJson);
  s.put("x.csv", ids_csv(8));
  int code = run_captured({"inverse", "star", "--complex", s.path("k.json"), "--points",
                           s.path("x.csv"), "--out-dir", s.dir.string()});
  CHECK(code == 0);
  CHECK(s.has("params.json"));
  CHECK(s.has("certificate.json"));
  CHECK(s.has("lens.json"));
  CHECK(s.has("cover.json"));
  CHECK(s.has("mapper_output.json"));

  // Replay the forward pipeline from the written artifacts alone, then check
  // isomorphism against the target without touching the inverse path.
  fs::create_directories(s.dir / "replay");
  int replay = run_captured({"mapper", "--points", s.path("x.csv"), "--lens", s.path("lens.json"),
                             "--cover", s.path("cover.json"), "--max-dim", "1", "--out-dir",
                             (s.dir / "replay").string()});
  CHECK(replay == 0);
  int iso = run_captured({"iso", "--a", (s.dir / "replay" / "mapper_output.json").string(),
                          "--b", s.path("k.json")});
  CHECK(iso == 0);
}

TEST_CASE("cli inverse star exits 5 with the bound echoed") {
  Scratch s("inverse_short");
  s.put("k.json", R"({"faces":[[0,1],[1,2],[2,3],[0,3]]})");
  s.put("x.csv", ids_csv(3));
  std::string out;
  int code = run_captured({"inverse", "star", "--complex", s.path("k.json"), "--points",
                           s.path("x.csv"), "--out-dir", s.dir.string()},
                          &out);
  CHECK(code == 5);
}

TEST_CASE("cli inverse geometric-star round trip") {
  Scratch s("inverse_geo");
  s.put("k.json", kGraphJson);
  s.put("x.csv", ids_csv(7));
  int code = run_captured({"inverse", "geometric-star", "--complex", s.path("k.json"),
                           "--points", s.path("x.csv"), "--out-dir", s.dir.string()});
  CHECK(code == 0);
  CHECK(s.has("certificate.json"));
  Json cert = Json::parse(s.get("certificate.json"));
  CHECK(cert.at("isomorphic") == true);
}

TEST_CASE("cli inverse convex certifies and is byte-deterministic") {
  Scratch s("inverse_convex");
  s.put("k.json", R"({"faces":[[0,1],[1,2],[2,3],[0,3],[4]]})");
  s.put("x.csv", ids_csv(5));
  auto run_once = [&](const std::string& sub) {
    fs::create_directories(s.dir / sub);
    int code = run_captured({"inverse", "convex", "--complex", s.path("k.json"), "--points",
                             s.path("x.csv"), "--seed", "0", "--max-trials", "10000", "--out-dir",
                             (s.dir / sub).string()});
    CHECK(code == 0);
    return read_file((s.dir / sub / "family.json").string());
  };
  std::string first = run_once("a");
  std::string second = run_once("b");
  CHECK(first == second);

  // The family re-certifies through the standalone command.
  int certify = run_captured({"certify", "--family", (s.dir / "a" / "family.json").string(),
                              "--complex", s.path("k.json")});
  CHECK(certify == 0);

  // Replay through the forward pipeline.
  fs::create_directories(s.dir / "replay");
  int replay = run_captured({"mapper", "--points", s.path("x.csv"), "--lens",
                             (s.dir / "a" / "lens.json").string(), "--cover",
                             (s.dir / "a" / "cover.json").string(), "--out-dir",
                             (s.dir / "replay").string()});
  CHECK(replay == 0);
  int iso = run_captured({"iso", "--a", (s.dir / "replay" / "mapper_output.json").string(),
                          "--b", s.path("k.json")});
  CHECK(iso == 0);
}

TEST_CASE("cli certify rejects a family that misses an edge") {
  Scratch s("certify_bad");
  ConvexFamily family;
  family.ambient_dim = 3;
  family.sets.push_back(VPolytope::box({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}));
  family.sets.push_back(VPolytope::box({Rat(5), Rat(5), Rat(5)}, {Rat(6), Rat(6), Rat(6)}));
  s.put("family.json", json_dumps(family_to_json(family)));
  s.put("k.json", R"({"faces":[[0,1]]})");
  std::string out;
  int code = run_captured(
      {"certify", "--family", s.path("family.json"), "--complex", s.path("k.json")}, &out);
  CHECK(code == 1);
  Json diff = Json::parse(out);
  CHECK(diff.at("certified") == false);
  CHECK(diff.at("tuple") == Json::array({0, 1}));
}

TEST_CASE("cli iso distinguishes the path from the claw") {
  Scratch s("iso");
  s.put("a.json", R"({"faces":[[0,1],[1,2],[2,3]]})");
  s.put("b.json", R"({"faces":[[0,1],[0,2],[0,3]]})");
  CHECK(run_captured({"iso", "--a", s.path("a.json"), "--b", s.path("b.json")}) == 1);
  CHECK(run_captured({"iso", "--a", s.path("a.json"), "--b", s.path("a.json")}) == 0);
}

TEST_CASE("cli extend eval prints exact values at domain points") {
  Scratch s("extend_eval");
  s.put("data.json",
        R"({"points":[{"id":0,"coords":["0"],"value":["0"]},{"id":1,"coords":["1"],"value":["2"]}]})");
  s.put("q.csv", "id,x0\n0,0\n1,1/2\n");
  std::string out;
  int code = run_captured({"extend", "eval", "--data", s.path("data.json"), "--query",
                           s.path("q.csv")},
                          &out);
  CHECK(code == 0);
  Json results = Json::parse(out);
  CHECK(results.at("results")[0].at("value")[0].at("base") == "0");
  CHECK(results.at("results")[0].at("value")[0].at("rad2") == "0");
  CHECK(results.at("results")[1].at("value_fp")[0] == doctest::Approx(1.0));
}

TEST_CASE("cli extend radii and verify flow") {
  Scratch s("extend_flow");
  // Two data points mapping into a fat cube, L = 2.
  s.put("data.json",
        R"({"points":[{"id":0,"coords":["0"],"value":["1","1","1"]},
                      {"id":1,"coords":["1/4"],"value":["1","1","3/2"]}]})");
  ConvexFamily omega;
  omega.ambient_dim = 3;
  omega.sets.push_back(VPolytope::box({Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(2), Rat(2)}));
  s.put("family.json", json_dumps(family_to_json(omega)));
  int code = run_captured({"extend", "radii", "--data", s.path("data.json"), "--omega",
                           s.path("family.json"), "--out-dir", s.dir.string()});
  CHECK(code == 0);
  CHECK(s.has("radii.json"));
  Json radii = Json::parse(s.get("radii.json"));
  CHECK(radii.at("entries")[0].at("r2") == "1/12");

  s.put("new.csv", "id,x0\n10,1/8\n");
  std::string out;
  int verify = run_captured({"extend", "verify", "--data", s.path("data.json"), "--omega",
                             s.path("family.json"), "--radii", s.path("radii.json"),
                             "--new-points", s.path("new.csv")},
                            &out);
  CHECK(verify == 0);
  CHECK(Json::parse(out).at("stable") == true);

  s.put("far.csv", "id,x0\n10,100\n");
  int outside = run_captured({"extend", "verify", "--data", s.path("data.json"), "--omega",
                              s.path("family.json"), "--radii", s.path("radii.json"),
                              "--new-points", s.path("far.csv")},
                             &out);
  CHECK(outside == 1);
  CHECK(Json::parse(out).at("outside_points") == Json::array({10}));
}

TEST_CASE("cli mapper output is byte-identical across runs") {
  Scratch s("determinism");
  s.put("points.csv", kCirclePoints);
  s.put("lens.json", kHeightLens);
  s.put("cover.json", kIntervalCover);
  auto run_once = [&](const std::string& sub) {
    fs::create_directories(s.dir / sub);
    int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                             s.path("lens.json"), "--cover", s.path("cover.json"),
                             "--clustering", "single-linkage", "--epsilon", "4", "--out-dir",
                             (s.dir / sub).string()});
    CHECK(code == 0);
    return read_file((s.dir / sub / "mapper_output.json").string());
  };
  CHECK(run_once("a") == run_once("b"));
}

TEST_CASE("cli rejects malformed json with exit 2") {
  Scratch s("badjson");
  s.put("points.csv", "id,x0\n0,1\n");
  s.put("lens.json", "{not json");
  s.put("cover.json", "[]");
  int code = run_captured({"mapper", "--points", s.path("points.csv"), "--lens",
                           s.path("lens.json"), "--cover", s.path("cover.json"), "--out-dir",
                           s.dir.string()});
  CHECK(code == 2);
}

TEST_CASE("cli inverse convex exits 4 when the trial budget is exhausted") {
  Scratch s("exhausted");
  s.put("k.json", R"({"faces":[[0,1]]})");
  s.put("x.csv", ids_csv(1));
  int code = run_captured({"inverse", "convex", "--complex", s.path("k.json"), "--points",
                           s.path("x.csv"), "--max-trials", "0", "--out-dir", s.dir.string()});
  CHECK(code == 4);
}

TEST_CASE("serialization round trips") {
  // Point cloud CSV keeps exact coordinates.
  PointCloud x = PointCloud::make({{0, {Rat(1, 3), Rat(-2)}}, {5, {rat(25, 100), Rat(7)}}});
  PointCloud back = point_cloud_from_csv_string(point_cloud_to_csv(x));
  REQUIRE(back.points.size() == 2);
  CHECK(back.at(0).coords == x.at(0).coords);
  CHECK(back.at(5).coords == x.at(5).coords);
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("-1.5e-3") == Rat(-3, 2000));
  CHECK(rat_from_string("6/8") == Rat(3, 4));

  // Complex JSON through facets.
  SimplicialComplex k = SimplicialComplex::from_faces({{0, 1, 2}, {2, 3}, {7}});
  CHECK(complex_from_json(complex_to_json(k)) == k);

  // Lens JSON, both kinds.
  Lens face_lens;
  face_lens.kind = Lens::Kind::TableToFace;
  face_lens.face_table.emplace(3, Simplex({0, 1}));
  Lens fl = lens_from_json(lens_to_json(face_lens));
  CHECK(fl.face_table.at(3) == Simplex({0, 1}));
  Lens point_lens;
  point_lens.kind = Lens::Kind::TableToPoint;
  point_lens.point_table.emplace(4, RatVec{Rat(1, 2), Rat(3)});
  Lens pl = lens_from_json(lens_to_json(point_lens));
  CHECK(pl.point_table.at(4) == RatVec{Rat(1, 2), Rat(3)});

  // Cover JSON across all shapes.
  IndexedCover cover;
  cover.elements.push_back(CoverElement::star(2));
  cover.elements.push_back(CoverElement::interval(Rat(0), Rat(1, 2)));
  cover.elements.push_back(CoverElement::box({Rat(0), Rat(0)}, {Rat(1), Rat(2)}));
  cover.elements.push_back(
      CoverElement::from_polytope(VPolytope{{RatVec{Rat(0), Rat(0), Rat(0)}}}));
  cover.elements.push_back(CoverElement::point_set({3, 1, 3}));
  IndexedCover cover_back = cover_from_json(cover_to_json(cover));
  REQUIRE(cover_back.elements.size() == 5);
  CHECK(cover_back.elements[0].star_vertex == 2);
  CHECK(cover_back.elements[1].hi == Rat(1, 2));
  CHECK(cover_back.elements[4].point_ids == std::vector<int>{1, 3});

  // Family JSON with certificates.
  ConvexFamily family;
  family.ambient_dim = 3;
  family.sets.push_back(VPolytope::box({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}));
  family.sets.push_back(VPolytope::box({Rat(2), Rat(0), Rat(0)}, {Rat(3), Rat(1), Rat(1)}));
  Separator sep{{Rat(1), Rat(0), Rat(0)}, Rat(3, 2)};
  family.separators.emplace(std::make_pair(0, 1), sep);
  ConvexFamily fam_back = family_from_json(family_to_json(family));
  CHECK(fam_back.sets.size() == 2);
  CHECK(fam_back.separators.at({0, 1}).offset == Rat(3, 2));

  // Safety radii JSON.
  SafetyRadii radii;
  radii.entries.push_back(SafetyRadii::Entry{4, Rat(1), Rat(1, 12), 0, 0.2886});
  SafetyRadii radii_back = radii_from_json(radii_to_json(radii));
  CHECK(radii_back.at(4).r2 == Rat(1, 12));

  // DOT emitters mention vertices and edges.
  std::string dot = complex_to_dot(k.skeleton(1));
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}
