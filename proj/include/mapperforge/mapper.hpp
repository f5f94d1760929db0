#ifndef MAPPERFORGE_MAPPER_HPP
#define MAPPERFORGE_MAPPER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mapperforge/complex.hpp"
#include "mapperforge/convex.hpp"

namespace mapperforge {

struct PointCloud {
  struct Point {
    int id;
    RatVec coords;
  };
  std::vector<Point> points;
  int ambient_dim = 0;

  static PointCloud make(std::vector<Point> pts);

  bool has(int id) const;
  const Point& at(int id) const;
  std::size_t size() const { return points.size(); }
};

/// Explicit finite map from point ids to lens targets: faces of a reference
/// complex, points of R^k, or a coordinate of the point itself.
struct Lens {
  enum class Kind { TableToFace, TableToPoint, CoordinateProjection };
  Kind kind = Kind::TableToFace;
  std::map<int, Simplex> face_table;
  std::map<int, RatVec> point_table;
  int axis = 0;

  const Simplex& face_target(int id) const;
  RatVec point_target(int id, const PointCloud& x) const;
  /// Throws MissingLensEntry naming the first uncovered point id.
  void check_total(const PointCloud& x) const;
};

/// Open star of a vertex in a geometric realization: the pieces are the
/// realized maximal faces containing the apex, and a point belongs to the
/// star iff its barycentric coordinate at the apex is positive in some piece.
struct GeometricStarShape {
  VertexId apex = -1;
  struct Piece {
    std::vector<VertexId> vertices;
    std::vector<RatVec> points;
  };
  std::vector<Piece> pieces;
  bool contains(const RatVec& q) const;
};

struct CoverElement {
  enum class Shape { StarOfVertex, Interval, Box, Polytope, PointIdSet, GeometricStar };
  Shape shape = Shape::StarOfVertex;

  VertexId star_vertex = -1;      // StarOfVertex
  Rat lo, hi;                     // Interval
  RatVec box_min, box_max;        // Box
  VPolytope polytope;             // Polytope
  std::vector<int> point_ids;     // PointIdSet, sorted
  GeometricStarShape star_body;   // GeometricStar

  static CoverElement star(VertexId v);
  static CoverElement interval(Rat lo, Rat hi);
  static CoverElement box(RatVec lo, RatVec hi);
  static CoverElement from_polytope(VPolytope p);
  static CoverElement point_set(std::vector<int> ids);
  static CoverElement geometric_star(GeometricStarShape body);
};

/// Ordered cover; duplicates allowed (multiset semantics come from indexing).
struct IndexedCover {
  std::vector<CoverElement> elements;
};

/// Nerve complex plus, per nerve vertex, the cover element and cluster it
/// came from and the member point ids.
struct MapperOutput {
  SimplicialComplex complex;
  struct VertexInfo {
    int vertex;
    int cover_index;
    int cluster;
    std::vector<int> members;
  };
  std::vector<VertexInfo> provenance;
};

struct ClusterMethod {
  enum class Kind { Trivial, SingleLinkage };
  Kind kind = Kind::Trivial;
  Rat epsilon = 0;
  static ClusterMethod trivial() { return {}; }
  static ClusterMethod single_linkage(Rat eps);
};

/// Point ids whose lens target lies in the cover element, sorted ascending.
std::vector<int> preimage(const PointCloud& x, const Lens& f, const CoverElement& u);

std::vector<std::vector<int>> cluster(const std::vector<int>& ids, const PointCloud& x,
                                      const ClusterMethod& method);

/// Nerve of a family of point-id sets.  Vertex i exists iff family[i] is
/// non-empty; a face is any index tuple (of size <= max_dim+1) whose sets
/// share a point id.
SimplicialComplex nerve(const std::vector<std::vector<int>>& family, int max_dim);

MapperOutput mapper_run(const PointCloud& x, const Lens& f, const IndexedCover& cover,
                        const ClusterMethod& method, int max_dim = 1);

MapperOutput mapper_trivial(const PointCloud& x, const Lens& f, const IndexedCover& cover,
                            int max_dim = 1);

/// Faces of the output complex rewritten as sorted cover-index tuples; the
/// cover-level intersection pattern, independent of vertex numbering.
std::set<std::vector<int>> provenance_pattern(const MapperOutput& out);

} // namespace mapperforge

#endif
