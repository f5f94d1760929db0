#include "mapperforge/mapper.hpp"

#include <algorithm>
#include <numeric>

#include "mapperforge/errors.hpp"

namespace mapperforge {

PointCloud PointCloud::make(std::vector<Point> pts) {
  PointCloud x;
  x.points = std::move(pts);
  std::set<int> ids;
  for (const Point& p : x.points) {
    if (p.id < 0) fail(Errc::NegativeId, "negative point id " + std::to_string(p.id));
    if (!ids.insert(p.id).second)
      fail(Errc::BadInput, "duplicate point id " + std::to_string(p.id));
  }
  if (!x.points.empty()) {
    x.ambient_dim = static_cast<int>(x.points[0].coords.size());
    for (const Point& p : x.points)
      if (static_cast<int>(p.coords.size()) != x.ambient_dim)
        fail(Errc::DimensionMismatch, "point " + std::to_string(p.id) + " has wrong dimension");
  }
  return x;
}

bool PointCloud::has(int id) const {
  for (const Point& p : points)
    if (p.id == id) return true;
  return false;
}

const PointCloud::Point& PointCloud::at(int id) const {
  for (const Point& p : points)
    if (p.id == id) return p;
  fail(Errc::BadInput, "unknown point id " + std::to_string(id));
}

const Simplex& Lens::face_target(int id) const {
  auto it = face_table.find(id);
  if (it == face_table.end())
    fail(Errc::MissingLensEntry, "lens has no entry for point id " + std::to_string(id));
  return it->second;
}

RatVec Lens::point_target(int id, const PointCloud& x) const {
  if (kind == Kind::TableToPoint) {
    auto it = point_table.find(id);
    if (it == point_table.end())
      fail(Errc::MissingLensEntry, "lens has no entry for point id " + std::to_string(id));
    return it->second;
  }
  if (kind == Kind::CoordinateProjection) {
    const PointCloud::Point& p = x.at(id);
    if (axis < 0 || axis >= static_cast<int>(p.coords.size()))
      fail(Errc::BadInput, "projection axis " + std::to_string(axis) + " out of range");
    return {p.coords[static_cast<std::size_t>(axis)]};
  }
  fail(Errc::IncompatibleCoverShape, "face-valued lens has no point target");
}

void Lens::check_total(const PointCloud& x) const {
  if (kind == Kind::CoordinateProjection) {
    if (x.ambient_dim > 0 && (axis < 0 || axis >= x.ambient_dim))
      fail(Errc::BadInput, "projection axis " + std::to_string(axis) + " out of range");
    return;
  }
  for (const PointCloud::Point& p : x.points) {
    bool present = kind == Kind::TableToFace ? face_table.count(p.id) > 0
                                             : point_table.count(p.id) > 0;
    if (!present)
      fail(Errc::MissingLensEntry, "lens has no entry for point id " + std::to_string(p.id));
  }
}

bool GeometricStarShape::contains(const RatVec& q) const {
  for (const Piece& piece : pieces) {
    auto bc = barycentric_coordinates(q, piece.points);
    if (!bc) continue;
    bool inside = true;
    bool apex_positive = false;
    for (std::size_t i = 0; i < bc->size(); ++i) {
      if ((*bc)[i] < 0) {
        inside = false;
        break;
      }
      if (piece.vertices[i] == apex && (*bc)[i] > 0) apex_positive = true;
    }
    if (inside && apex_positive) return true;
  }
  return false;
}

CoverElement CoverElement::star(VertexId v) {
  CoverElement e;
  e.shape = Shape::StarOfVertex;
  e.star_vertex = v;
  return e;
}

CoverElement CoverElement::interval(Rat lo, Rat hi) {
  CoverElement e;
  e.shape = Shape::Interval;
  e.lo = std::move(lo);
  e.hi = std::move(hi);
  return e;
}

CoverElement CoverElement::box(RatVec lo, RatVec hi) {
  if (lo.size() != hi.size()) fail(Errc::DimensionMismatch, "box corners differ in dimension");
  CoverElement e;
  e.shape = Shape::Box;
  e.box_min = std::move(lo);
  e.box_max = std::move(hi);
  return e;
}

CoverElement CoverElement::from_polytope(VPolytope p) {
  CoverElement e;
  e.shape = Shape::Polytope;
  e.polytope = std::move(p);
  return e;
}

CoverElement CoverElement::point_set(std::vector<int> ids) {
  CoverElement e;
  e.shape = Shape::PointIdSet;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  e.point_ids = std::move(ids);
  return e;
}

CoverElement CoverElement::geometric_star(GeometricStarShape body) {
  CoverElement e;
  e.shape = Shape::GeometricStar;
  e.star_body = std::move(body);
  return e;
}

ClusterMethod ClusterMethod::single_linkage(Rat eps) {
  if (eps < 0) fail(Errc::NegativeEpsilon, "single-linkage epsilon must be non-negative");
  ClusterMethod m;
  m.kind = Kind::SingleLinkage;
  m.epsilon = std::move(eps);
  return m;
}

namespace {

bool point_in_element(const RatVec& t, const CoverElement& u) {
  switch (u.shape) {
    case CoverElement::Shape::Interval:
      if (t.size() != 1)
        fail(Errc::IncompatibleCoverShape, "interval cover needs 1-dimensional lens targets");
      return u.lo <= t[0] && t[0] <= u.hi;
    case CoverElement::Shape::Box:
      if (t.size() != u.box_min.size())
        fail(Errc::IncompatibleCoverShape, "box cover dimension mismatch");
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < u.box_min[i] || t[i] > u.box_max[i]) return false;
      return true;
    case CoverElement::Shape::Polytope:
      if (static_cast<int>(t.size()) != u.polytope.ambient_dim())
        fail(Errc::IncompatibleCoverShape, "polytope cover dimension mismatch");
      return vpolytope_contains(u.polytope, t);
    case CoverElement::Shape::GeometricStar:
      if (u.star_body.pieces.empty()) return false;
      if (t.size() != u.star_body.pieces[0].points[0].size())
        fail(Errc::IncompatibleCoverShape, "geometric star cover dimension mismatch");
      return u.star_body.contains(t);
    default:
      fail(Errc::IncompatibleCoverShape, "cover element does not accept point targets");
  }
}

} // namespace

std::vector<int> preimage(const PointCloud& x, const Lens& f, const CoverElement& u) {
  std::vector<int> out;
  if (u.shape == CoverElement::Shape::PointIdSet) {
    for (const PointCloud::Point& p : x.points)
      if (std::binary_search(u.point_ids.begin(), u.point_ids.end(), p.id)) out.push_back(p.id);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (f.kind == Lens::Kind::TableToFace) {
    if (u.shape != CoverElement::Shape::StarOfVertex)
      fail(Errc::IncompatibleCoverShape, "face-valued lens pairs only with star cover elements");
    for (const PointCloud::Point& p : x.points)
      if (f.face_target(p.id).contains(u.star_vertex)) out.push_back(p.id);
  } else {
    if (u.shape == CoverElement::Shape::StarOfVertex)
      fail(Errc::IncompatibleCoverShape, "star cover elements need a face-valued lens");
    for (const PointCloud::Point& p : x.points)
      if (point_in_element(f.point_target(p.id, x), u)) out.push_back(p.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<int>> cluster(const std::vector<int>& ids, const PointCloud& x,
                                      const ClusterMethod& method) {
  if (ids.empty()) return {};
  if (method.kind == ClusterMethod::Kind::Trivial) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    return {sorted};
  }
  if (method.epsilon < 0) fail(Errc::NegativeEpsilon, "single-linkage epsilon must be non-negative");
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  Rat eps2 = method.epsilon * method.epsilon;
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist2(x.at(sorted[i]).coords, x.at(sorted[j]).coords) <= eps2) uf.unite(i, j);
  std::map<std::size_t, std::vector<int>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[uf.find(i)].push_back(sorted[i]);
  // Components ordered by their smallest member.
  std::vector<std::vector<int>> out;
  out.reserve(comps.size());
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void nerve_expand(const std::vector<std::vector<int>>& family, int max_dim,
                  std::vector<VertexId>& tuple, const std::vector<int>& common,
                  std::vector<Simplex>& faces) {
  faces.emplace_back(tuple);
  if (static_cast<int>(tuple.size()) > max_dim) return;
  for (std::size_t j = static_cast<std::size_t>(tuple.back()) + 1; j < family.size(); ++j) {
    if (family[j].empty()) continue;
    std::vector<int> next = intersect_sorted(common, family[j]);
    if (next.empty()) continue;
    tuple.push_back(static_cast<VertexId>(j));
    nerve_expand(family, max_dim, tuple, next, faces);
    tuple.pop_back();
  }
}

} // namespace

SimplicialComplex nerve(const std::vector<std::vector<int>>& family, int max_dim) {
  if (max_dim < 0) fail(Errc::BadInput, "nerve: max_dim must be >= 0");
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) continue;
    std::vector<VertexId> tuple{static_cast<VertexId>(i)};
    nerve_expand(family, max_dim, tuple, family[i], faces);
  }
  return SimplicialComplex::from_simplices(faces);
}

MapperOutput mapper_run(const PointCloud& x, const Lens& f, const IndexedCover& cover,
                        const ClusterMethod& method, int max_dim) {
  if (!cover.elements.empty() &&
      std::any_of(cover.elements.begin(), cover.elements.end(), [](const CoverElement& u) {
        return u.shape != CoverElement::Shape::PointIdSet;
      }))
    f.check_total(x);
  std::vector<std::vector<int>> family;
  std::vector<std::pair<int, int>> origin; // (cover index, cluster ordinal)
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    std::vector<int> pre = preimage(x, f, cover.elements[i]);
    std::vector<std::vector<int>> clusters = cluster(pre, x, method);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      family.push_back(std::move(clusters[c]));
      origin.emplace_back(static_cast<int>(i), static_cast<int>(c));
    }
  }
  MapperOutput out;
  out.complex = nerve(family, max_dim);
  for (std::size_t v = 0; v < family.size(); ++v)
    out.provenance.push_back(MapperOutput::VertexInfo{static_cast<int>(v), origin[v].first,
                                                      origin[v].second, family[v]});
  return out;
}

MapperOutput mapper_trivial(const PointCloud& x, const Lens& f, const IndexedCover& cover,
                            int max_dim) {
  return mapper_run(x, f, cover, ClusterMethod::trivial(), max_dim);
}

std::set<std::vector<int>> provenance_pattern(const MapperOutput& out) {
  std::map<int, int> cover_of;
  for (const auto& info : out.provenance) cover_of[info.vertex] = info.cover_index;
  std::set<std::vector<int>> pattern;
  for (const Simplex& face : out.complex.faces()) {
    std::vector<int> tuple;
    tuple.reserve(face.size());
    for (VertexId v : face.vertices()) tuple.push_back(cover_of.at(v));
    std::sort(tuple.begin(), tuple.end());
    pattern.insert(std::move(tuple));
  }
  return pattern;
}

} // namespace mapperforge
