#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graphgen.hpp"
#include "mapperforge/errors.hpp"
#include "mapperforge/inverse.hpp"
#include "mapperforge/io.hpp"
#include "oracles.hpp"

using namespace mapperforge;
namespace mft = mapperforge::testing;

namespace {

PointCloud dummy_cloud(int n) {
  std::vector<PointCloud::Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, {Rat(i)}});
  return PointCloud::make(std::move(pts));
}

// Triangle with a tail plus one isolated vertex: 7 vertices, 6 edges.
SimplicialComplex tailed_triangle() {
  return SimplicialComplex::from_faces({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {6}});
}

} // namespace

TEST_CASE("target list ordering: faces by (dim, lex), then isolated vertices") {
  SimplicialComplex k = SimplicialComplex::from_faces({{0, 1, 2}, {5}, {3}});
  auto targets = synthesis_targets(k);
  REQUIRE(targets.size() == 6);
  CHECK(targets[0] == Simplex({0, 1}));
  CHECK(targets[1] == Simplex({0, 2}));
  CHECK(targets[2] == Simplex({1, 2}));
  CHECK(targets[3] == Simplex({0, 1, 2}));
  CHECK(targets[4] == Simplex({3}));
  CHECK(targets[5] == Simplex({5}));
}

TEST_CASE("star synthesis on a 7-vertex graph with an isolated vertex") {
  SimplicialComplex g = tailed_triangle();
  PointCloud x = dummy_cloud(8); // |E| + |I| = 7, one surplus point
  StarParams params = synthesize_star_params(g, x);
  CHECK(params.cover.elements.size() == 7);
  // Surjectivity: every edge and the isolated vertex receive a point.
  std::set<Simplex> hit;
  for (const auto& [id, face] : params.lens.face_table) hit.insert(face);
  CHECK(hit.size() == 7);
  IsoCertificate cert = verify_round_trip(g, x);
  CHECK(verify_isomorphism(mapper_trivial(x, params.lens, params.cover, 1).complex, g, cert));
}

TEST_CASE("star synthesis: one isolated vertex, one point") {
  SimplicialComplex k = SimplicialComplex::from_faces({{0}});
  PointCloud x = dummy_cloud(1);
  StarParams params = synthesize_star_params(k, x);
  CHECK(params.lens.face_table.at(0) == Simplex({0}));
  MapperOutput out = mapper_trivial(x, params.lens, params.cover, 0);
  CHECK(out.complex.face_count() == 1);
  CHECK(verify_round_trip(k, x).mapping.size() == 1);
}

TEST_CASE("star synthesis rejects short point clouds with the exact bound") {
  SimplicialComplex c4 = SimplicialComplex::from_faces({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  try {
    synthesize_star_params(c4, dummy_cloud(3));
    FAIL("expected InsufficientPoints");
  } catch (const InsufficientPointsError& e) {
    CHECK(e.needed == 4);
    CHECK(e.got == 3);
  }
}

TEST_CASE("star synthesis on the empty graph yields isolated vertices only") {
  SimplicialComplex k = SimplicialComplex::from_faces({{0}, {1}, {2}});
  PointCloud x = dummy_cloud(3);
  StarParams params = synthesize_star_params(k, x);
  MapperOutput out = mapper_trivial(x, params.lens, params.cover, 0);
  CHECK(out.complex.face_count() == 3);
  CHECK(out.complex.dimension() == 0);
  CHECK(verify_round_trip(k, x).mapping.size() == 3);
}

TEST_CASE("star round trip through a full triangle needs max_dim 2") {
  SimplicialComplex tri = SimplicialComplex::from_faces({{0, 1, 2}});
  PointCloud x = dummy_cloud(4); // 3 edges + 1 triangle
  StarParams params = synthesize_star_params(tri, x);
  MapperOutput out = mapper_trivial(x, params.lens, params.cover, 2);
  auto cert = isomorphic(out.complex, tri);
  REQUIRE(cert.has_value());
  // Against the brute-force nerve of the three star preimages.
  std::vector<std::vector<int>> preimages;
  for (const CoverElement& u : params.cover.elements)
    preimages.push_back(preimage(x, params.lens, u));
  CHECK(out.complex == mft::oracle_nerve(preimages, 2));
}

TEST_CASE("preimage intersections match faces exactly") {
  SimplicialComplex k = SimplicialComplex::from_faces({{0, 1, 2}, {2, 3}, {4}});
  PointCloud x = dummy_cloud(6);
  StarParams params = synthesize_star_params(k, x);
  std::map<VertexId, std::set<int>> pre;
  const auto& verts = k.vertex_set();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto ids = preimage(x, params.lens, params.cover.elements[i]);
    pre[verts[i]] = std::set<int>(ids.begin(), ids.end());
  }
  // Every subset of vertices of size <= 3: common preimage iff face of K.
  for (std::size_t mask = 1; mask < (std::size_t{1} << verts.size()); ++mask) {
    std::vector<VertexId> tuple;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (mask & (std::size_t{1} << i)) tuple.push_back(verts[i]);
    if (tuple.size() > 3) continue;
    std::set<int> common = pre[tuple[0]];
    for (VertexId v : tuple) {
      std::set<int> next;
      for (int id : pre[v])
        if (common.count(id)) next.insert(id);
      common = std::move(next);
    }
    CHECK(!common.empty() == k.contains(Simplex(tuple)));
  }
}

TEST_CASE("round trip holds for surplus points up to +3") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    // Random small complex with at most 12 faces.
    std::vector<std::vector<VertexId>> facets;
    int nv = 1 + static_cast<int>(rng() % 5);
    for (int v = 0; v < nv; ++v) facets.push_back({v});
    int extra = static_cast<int>(rng() % 4);
    for (int e = 0; e < extra; ++e) {
      std::set<VertexId> face;
      int sz = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < sz; ++i) face.insert(static_cast<VertexId>(rng() % nv));
      facets.push_back(std::vector<VertexId>(face.begin(), face.end()));
    }
    SimplicialComplex k = SimplicialComplex::from_faces(facets);
    if (k.face_count() > 12) continue;
    long minimum = static_cast<long>(synthesis_targets(k).size());
    for (long surplus = 0; surplus <= 3; ++surplus) {
      PointCloud x = dummy_cloud(static_cast<int>(minimum + surplus));
      if (x.points.empty()) continue;
      CHECK_NOTHROW(verify_round_trip(k, x));
    }
  }
}

TEST_CASE("round trip across all graph classes on four vertices") {
  auto classes = mft::graph_classes(4);
  CHECK(classes.size() == 11);
  for (std::uint32_t mask : classes) {
    SimplicialComplex g = mft::graph_complex(4, mask);
    long minimum = static_cast<long>(synthesis_targets(g).size());
    verify_round_trip(g, dummy_cloud(static_cast<int>(minimum)));
    verify_round_trip(g, dummy_cloud(static_cast<int>(minimum) + 3));
  }
}

TEST_CASE("synthesis is deterministic byte-for-byte") {
  SimplicialComplex g = tailed_triangle();
  PointCloud x = dummy_cloud(9);
  std::string a = json_dumps(star_params_to_json(synthesize_star_params(g, x)));
  std::string b = json_dumps(star_params_to_json(synthesize_star_params(g, x)));
  CHECK(a == b);
}

TEST_CASE("empty complex edge cases") {
  SimplicialComplex empty;
  PointCloud none = PointCloud::make({});
  StarParams params = synthesize_star_params(empty, none);
  CHECK(params.cover.elements.empty());
  CHECK(verify_round_trip(empty, none).mapping.empty());
  CHECK_THROWS_AS(synthesize_star_params(empty, dummy_cloud(2)), Error);
}
