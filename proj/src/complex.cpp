#include "mapperforge/complex.hpp"

#include <algorithm>
#include <string>

#include "mapperforge/errors.hpp"

namespace mapperforge {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) fail(Errc::EmptyFace, "empty face");
  for (VertexId v : vertices_)
    if (v < 0) fail(Errc::NegativeId, "negative vertex id " + std::to_string(v));
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::vector<Simplex> Simplex::subfaces() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(vertices_[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

void SimplicialComplex::rebuild_vertices() {
  std::set<VertexId> vs;
  for (const Simplex& f : faces_)
    for (VertexId v : f.vertices()) vs.insert(v);
  vertices_.assign(vs.begin(), vs.end());
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::vector<VertexId>>& raw,
                                                bool* was_closed) {
  std::vector<Simplex> faces;
  faces.reserve(raw.size());
  for (const auto& f : raw) faces.emplace_back(f);
  return from_simplices(faces, was_closed);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& faces,
                                                    bool* was_closed) {
  SimplicialComplex k;
  std::set<Simplex> input(faces.begin(), faces.end());
  for (const Simplex& f : input) {
    if (f.size() > 25) fail(Errc::BadInput, "face with more than 25 vertices");
    for (Simplex& sub : f.subfaces()) k.faces_.insert(std::move(sub));
  }
  if (was_closed) *was_closed = (input == k.faces_);
  k.rebuild_vertices();
  return k;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -1;
  return std::prev(faces_.end())->dim();
}

std::vector<Simplex> SimplicialComplex::star(VertexId v) const {
  if (!has_vertex(v)) fail(Errc::UnknownVertex, "unknown vertex " + std::to_string(v));
  std::vector<Simplex> out;
  for (const Simplex& f : faces_)
    if (f.contains(v)) out.push_back(f);
  return out;
}

std::vector<VertexId> SimplicialComplex::isolated_vertices() const {
  std::set<VertexId> covered;
  for (const Simplex& f : faces_)
    if (f.dim() >= 1)
      for (VertexId v : f.vertices()) covered.insert(v);
  std::vector<VertexId> out;
  for (VertexId v : vertices_)
    if (!covered.count(v)) out.push_back(v);
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  if (k < 0) fail(Errc::BadInput, "skeleton dimension must be >= 0");
  SimplicialComplex out;
  for (const Simplex& f : faces_)
    if (f.dim() <= k) out.faces_.insert(f);
  out.rebuild_vertices();
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const Simplex& f : faces_) {
    bool maximal = true;
    for (const Simplex& g : faces_) {
      if (g.size() > f.size() && f.is_subset_of(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::positive_faces() const {
  std::vector<Simplex> out;
  for (const Simplex& f : faces_)
    if (f.dim() >= 1) out.push_back(f);
  return out;
}

std::map<int, std::size_t> SimplicialComplex::face_counts_by_dim() const {
  std::map<int, std::size_t> out;
  for (const Simplex& f : faces_) out[f.dim()]++;
  return out;
}

namespace {

// Per-vertex invariant: number of incident faces of each dimension.
std::vector<std::size_t> vertex_signature(const SimplicialComplex& k, VertexId v, int max_dim) {
  std::vector<std::size_t> sig(static_cast<std::size_t>(max_dim) + 1, 0);
  for (const Simplex& f : k.faces())
    if (f.contains(v)) sig[static_cast<std::size_t>(f.dim())]++;
  return sig;
}

struct IsoSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  std::vector<VertexId> va;
  std::vector<VertexId> vb;
  std::map<VertexId, VertexId> fwd;
  std::map<VertexId, VertexId> rev;
  std::vector<std::vector<std::size_t>> sig_a;
  std::vector<std::vector<std::size_t>> sig_b;

  bool pair_consistent(VertexId v, VertexId w) const {
    // Faces fully assigned once v->w is added must map onto faces of b, and
    // conversely for their images.
    for (const Simplex& f : a.faces()) {
      if (!f.contains(v)) continue;
      bool ready = true;
      std::vector<VertexId> image;
      image.reserve(f.size());
      for (VertexId u : f.vertices()) {
        if (u == v) {
          image.push_back(w);
        } else if (auto it = fwd.find(u); it != fwd.end()) {
          image.push_back(it->second);
        } else {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      if (!b.contains(Simplex(image))) return false;
    }
    for (const Simplex& g : b.faces()) {
      if (!g.contains(w)) continue;
      bool ready = true;
      std::vector<VertexId> pre;
      pre.reserve(g.size());
      for (VertexId u : g.vertices()) {
        if (u == w) {
          pre.push_back(v);
        } else if (auto it = rev.find(u); it != rev.end()) {
          pre.push_back(it->second);
        } else {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      if (!a.contains(Simplex(pre))) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == va.size()) return true;
    VertexId v = va[i];
    for (std::size_t j = 0; j < vb.size(); ++j) {
      VertexId w = vb[j];
      if (rev.count(w)) continue;
      if (sig_a[i] != sig_b[j]) continue;
      if (!pair_consistent(v, w)) continue;
      fwd[v] = w;
      rev[w] = v;
      if (extend(i + 1)) return true;
      fwd.erase(v);
      rev.erase(w);
    }
    return false;
  }
};

} // namespace

std::optional<IsoCertificate> isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.face_counts_by_dim() != b.face_counts_by_dim()) return std::nullopt;
  if (a.vertex_set().size() != b.vertex_set().size()) return std::nullopt;
  if (a.empty() && b.empty()) return IsoCertificate{};

  IsoSearch search{a, b, a.vertex_set(), b.vertex_set(), {}, {}, {}, {}};
  int md = std::max(a.dimension(), 0);
  for (VertexId v : search.va) search.sig_a.push_back(vertex_signature(a, v, md));
  for (VertexId w : search.vb) search.sig_b.push_back(vertex_signature(b, w, md));
  if (!search.extend(0)) return std::nullopt;
  IsoCertificate cert{search.fwd};
  return cert;
}

bool verify_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                        const IsoCertificate& cert) {
  if (a.vertex_set().size() != b.vertex_set().size()) return false;
  if (cert.mapping.size() != a.vertex_set().size()) return false;
  std::set<VertexId> image;
  for (VertexId v : a.vertex_set()) {
    auto it = cert.mapping.find(v);
    if (it == cert.mapping.end()) return false;
    if (!image.insert(it->second).second) return false; // not injective
    if (!b.has_vertex(it->second)) return false;
  }
  std::set<Simplex> mapped;
  for (const Simplex& f : a.faces()) {
    std::vector<VertexId> img;
    img.reserve(f.size());
    for (VertexId v : f.vertices()) img.push_back(cert.mapping.at(v));
    mapped.insert(Simplex(std::move(img)));
  }
  return mapped == b.faces();
}

} // namespace mapperforge
