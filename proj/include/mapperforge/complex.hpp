#ifndef MAPPERFORGE_COMPLEX_HPP
#define MAPPERFORGE_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mapperforge {

using VertexId = int;

/// A face: strictly increasing list of non-negative vertex ids.
class Simplex {
public:
  explicit Simplex(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(VertexId v) const;
  bool is_subset_of(const Simplex& other) const;

  /// All non-empty subsets, including the simplex itself.
  std::vector<Simplex> subfaces() const;

  bool operator==(const Simplex& o) const { return vertices_ == o.vertices_; }
  bool operator!=(const Simplex& o) const { return vertices_ != o.vertices_; }
  // Order by (dimension, lexicographic) so set iteration matches the
  // canonical face ordering used throughout.
  bool operator<(const Simplex& o) const {
    if (vertices_.size() != o.vertices_.size()) return vertices_.size() < o.vertices_.size();
    return vertices_ < o.vertices_;
  }

private:
  std::vector<VertexId> vertices_;
};

class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Closure-completes a raw face list.  `was_closed`, when given, reports
  /// whether the input already contained every subface.
  static SimplicialComplex from_faces(const std::vector<std::vector<VertexId>>& raw,
                                      bool* was_closed = nullptr);
  static SimplicialComplex from_simplices(const std::vector<Simplex>& faces,
                                          bool* was_closed = nullptr);

  const std::set<Simplex>& faces() const { return faces_; }
  const std::vector<VertexId>& vertex_set() const { return vertices_; }
  bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
  bool has_vertex(VertexId v) const;
  std::size_t face_count() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  int dimension() const; // -1 for the empty complex

  /// Faces containing v.  Throws UnknownVertex when v is not a vertex.
  std::vector<Simplex> star(VertexId v) const;

  /// Vertices contained in no face of dimension >= 1.
  std::vector<VertexId> isolated_vertices() const;

  /// All faces of dimension <= k.  Requires k >= 0.
  SimplicialComplex skeleton(int k) const;

  /// Maximal faces, in canonical (dimension, lexicographic) order.
  std::vector<Simplex> facets() const;

  /// Faces of dimension >= 1, in canonical order.
  std::vector<Simplex> positive_faces() const;

  std::map<int, std::size_t> face_counts_by_dim() const;

  bool operator==(const SimplicialComplex& o) const { return faces_ == o.faces_; }
  bool operator!=(const SimplicialComplex& o) const { return faces_ != o.faces_; }

private:
  std::set<Simplex> faces_;
  std::vector<VertexId> vertices_;
  void rebuild_vertices();
};

/// Witness that two complexes are isomorphic: a face-preserving vertex bijection.
struct IsoCertificate {
  std::map<VertexId, VertexId> mapping;
};

/// Face-preserving vertex bijection, or nullopt when none exists.  The
/// returned certificate is the lexicographically least one over the first
/// complex's sorted vertex list.
std::optional<IsoCertificate> isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// True iff applying `cert` to every face of `a` yields exactly the faces of `b`.
bool verify_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                        const IsoCertificate& cert);

} // namespace mapperforge

#endif
