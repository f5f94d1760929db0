#include "mapperforge/inverse.hpp"

#include "mapperforge/errors.hpp"

namespace mapperforge {

std::vector<Simplex> synthesis_targets(const SimplicialComplex& k) {
  std::vector<Simplex> targets = k.positive_faces();
  for (VertexId v : k.isolated_vertices()) targets.push_back(Simplex({v}));
  return targets;
}

StarParams synthesize_star_params(const SimplicialComplex& k, const PointCloud& x) {
  std::vector<Simplex> targets = synthesis_targets(k);
  if (targets.empty() && !x.points.empty())
    fail(Errc::BadInput, "complex has no faces; no lens can map a non-empty point cloud to it");
  if (x.points.size() < targets.size())
    throw InsufficientPointsError(static_cast<long>(targets.size()),
                                  static_cast<long>(x.points.size()));
  StarParams params;
  params.reference = k;
  for (VertexId v : k.vertex_set()) params.cover.elements.push_back(CoverElement::star(v));
  params.lens.kind = Lens::Kind::TableToFace;
  std::size_t next = 0;
  for (const PointCloud::Point& p : x.points) {
    params.lens.face_table.emplace(p.id, targets[next]);
    next = (next + 1) % targets.size();
  }
  return params;
}

IsoCertificate verify_round_trip(const SimplicialComplex& k, const PointCloud& x) {
  StarParams params = synthesize_star_params(k, x);
  int max_dim = std::max(k.dimension(), 0);
  MapperOutput out = mapper_trivial(x, params.lens, params.cover, max_dim);
  auto cert = isomorphic(out.complex, k);
  if (!cert)
    fail(Errc::RoundTripFailed, "synthesized star parameters did not reproduce the complex");
  return *cert;
}

} // namespace mapperforge
