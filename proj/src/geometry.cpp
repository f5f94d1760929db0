#include "mapperforge/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

#include "mapperforge/errors.hpp"
#include "mapperforge/inverse.hpp"

namespace mapperforge {

namespace {

// Every subset of this size must be affinely independent for face
// realizations to meet exactly in shared faces.
void check_general_position(const std::vector<RatVec>& points, int subset_size) {
  const int n = static_cast<int>(points.size());
  if (subset_size > n) subset_size = n;
  if (subset_size < 2) return;
  std::vector<int> idx(static_cast<std::size_t>(subset_size));
  std::vector<RatVec> chosen(static_cast<std::size_t>(subset_size));
  auto recurse = [&](auto&& self, int pos, int start) -> void {
    if (pos == subset_size) {
      for (int i = 0; i < subset_size; ++i)
        chosen[static_cast<std::size_t>(i)] = points[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      if (!affinely_independent(chosen))
        throw std::logic_error("moment-curve embedding lost general position");
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
}

} // namespace

ComplexEmbedding embed_complex(const SimplicialComplex& k, int d) {
  if (d < 1) fail(Errc::BadInput, "embedding target dimension must be >= 1");
  if (k.dimension() > d)
    fail(Errc::DimensionTooSmall,
         "complex dimension " + std::to_string(k.dimension()) + " exceeds target " +
             std::to_string(d));
  const int ambient = 2 * d + 1;
  ComplexEmbedding emb;
  emb.config.ambient_dim = ambient;
  Rat t = 1;
  std::vector<RatVec> all;
  for (VertexId v : k.vertex_set()) {
    emb.config.parameters[v] = t;
    emb.points[v] = moment_curve(t, ambient);
    all.push_back(emb.points[v]);
    t += 1;
  }
  check_general_position(all, 2 * d + 2);
  return emb;
}

namespace {

RatVec barycenter(const std::vector<RatVec>& points) {
  RatVec sum(points[0].size(), Rat(0));
  for (const RatVec& p : points) sum = vec_add(sum, p);
  return vec_scale(Rat(1, static_cast<long>(points.size())), sum);
}

} // namespace

GeometricStarCover geometric_star_cover(const SimplicialComplex& k, const PointCloud& x, int d) {
  std::vector<Simplex> targets = synthesis_targets(k);
  if (targets.empty() && !x.points.empty())
    fail(Errc::BadInput, "complex has no faces; no lens can map a non-empty point cloud to it");
  if (x.points.size() < targets.size())
    throw InsufficientPointsError(static_cast<long>(targets.size()),
                                  static_cast<long>(x.points.size()));
  GeometricStarCover out;
  out.embedding = embed_complex(k, d);

  std::vector<Simplex> maximal = k.facets();
  for (VertexId v : k.vertex_set()) {
    GeometricStarShape body;
    body.apex = v;
    for (const Simplex& f : maximal) {
      if (!f.contains(v)) continue;
      GeometricStarShape::Piece piece;
      piece.vertices = f.vertices();
      for (VertexId u : f.vertices()) piece.points.push_back(out.embedding.points.at(u));
      body.pieces.push_back(std::move(piece));
    }
    out.cover.elements.push_back(CoverElement::geometric_star(std::move(body)));
  }

  out.lens.kind = Lens::Kind::TableToPoint;
  std::size_t next = 0;
  for (const PointCloud::Point& p : x.points) {
    const Simplex& target = targets[next];
    std::vector<RatVec> corners;
    for (VertexId u : target.vertices()) corners.push_back(out.embedding.points.at(u));
    out.lens.point_table.emplace(p.id, barycenter(corners));
    next = (next + 1) % targets.size();
  }
  return out;
}

namespace {

struct CertifyContext {
  const ConvexFamily& family;
  const SimplicialComplex& k;
  int max_dim;
  std::vector<VertexId> verts;
  CertifiedPattern pattern;
  std::optional<PatternMismatch> mismatch;

  bool pair_nonempty(int i, int j) const {
    return pattern.witnesses.count({i, j}) > 0;
  }

  Simplex face_of(const std::vector<int>& tuple) const {
    std::vector<VertexId> vs;
    vs.reserve(tuple.size());
    for (int i : tuple) vs.push_back(verts[static_cast<std::size_t>(i)]);
    return Simplex(std::move(vs));
  }

  // Depth-first expansion over index tuples; only non-empty tuples are
  // extended, which is sound because the target complex is closed.
  bool expand(std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) > max_dim) return true;
    const int m = static_cast<int>(family.sets.size());
    for (int next = tuple.back() + 1; next < m; ++next) {
      bool pairs_ok = true;
      for (int i : tuple)
        if (!pair_nonempty(i, next)) {
          pairs_ok = false;
          break;
        }
      std::vector<int> probe = tuple;
      probe.push_back(next);
      bool expected = k.contains(face_of(probe));
      if (!pairs_ok) {
        // Some pair is already disjoint, so the tuple is empty; a face here
        // would have tripped the pairwise stage first.
        if (expected) throw std::logic_error("closed complex with a disjoint sub-pair");
        continue;
      }
      std::vector<const VPolytope*> sets;
      sets.reserve(probe.size());
      for (int i : probe) sets.push_back(&family.sets[static_cast<std::size_t>(i)]);
      TupleCertificate cert = tuple_intersection(sets);
      bool nonempty = std::holds_alternative<TupleWitness>(cert);
      if (nonempty != expected) {
        mismatch = PatternMismatch{probe, expected};
        return false;
      }
      if (nonempty) {
        pattern.tuple_witnesses.push_back(
            CertifiedPattern::FaceWitness{probe, std::get<TupleWitness>(cert)});
        if (!expand(probe)) return false;
      } else {
        pattern.tuple_refutations.push_back(
            CertifiedPattern::NonFaceRefutation{probe, std::get<TupleRefutation>(cert)});
      }
    }
    return true;
  }
};

} // namespace

CertifyResult certify_family(const ConvexFamily& family, const SimplicialComplex& k, int max_dim) {
  if (max_dim < 1) fail(Errc::BadInput, "certify_family: max_dim must be >= 1");
  const std::vector<VertexId>& verts = k.vertex_set();
  if (family.sets.size() != verts.size())
    fail(Errc::BadInput, "family size " + std::to_string(family.sets.size()) +
                             " does not match vertex count " + std::to_string(verts.size()));
  CertifyContext ctx{family, k, max_dim, verts, {}, {}};
  ctx.pattern.max_dim = max_dim;
  const int m = static_cast<int>(family.sets.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      PairCertificate cert = polytope_intersection(family.sets[static_cast<std::size_t>(i)],
                                                   family.sets[static_cast<std::size_t>(j)]);
      bool nonempty = std::holds_alternative<PairWitness>(cert);
      bool expected = k.contains(Simplex({verts[static_cast<std::size_t>(i)],
                                          verts[static_cast<std::size_t>(j)]}));
      if (nonempty != expected) return PatternMismatch{{i, j}, expected};
      if (nonempty)
        ctx.pattern.witnesses.emplace(std::make_pair(i, j), std::get<PairWitness>(cert));
      else
        ctx.pattern.separators.emplace(std::make_pair(i, j), std::get<Separator>(cert));
    }
  if (max_dim >= 2) {
    for (int i = 0; i < m && !ctx.mismatch; ++i)
      for (int j = i + 1; j < m && !ctx.mismatch; ++j) {
        if (!ctx.pair_nonempty(i, j)) continue;
        std::vector<int> tuple{i, j};
        if (!ctx.expand(tuple)) break;
      }
    if (ctx.mismatch) return *ctx.mismatch;
  }
  return ctx.pattern;
}

bool verify_family_certificates(const ConvexFamily& family, const SimplicialComplex& k,
                                const CertifiedPattern& cert) {
  const std::vector<VertexId>& verts = k.vertex_set();
  if (family.sets.size() != verts.size()) return false;
  const int m = static_cast<int>(family.sets.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto key = std::make_pair(i, j);
      bool has_witness = cert.witnesses.count(key) > 0;
      bool has_separator = cert.separators.count(key) > 0;
      if (has_witness == has_separator) return false; // exactly one per pair
      bool edge = k.contains(Simplex({verts[static_cast<std::size_t>(i)],
                                      verts[static_cast<std::size_t>(j)]}));
      if (edge != has_witness) return false;
      const VPolytope& a = family.sets[static_cast<std::size_t>(i)];
      const VPolytope& b = family.sets[static_cast<std::size_t>(j)];
      if (has_witness && !verify_pair_witness(a, b, cert.witnesses.at(key))) return false;
      if (has_separator && !verify_separator(a, b, cert.separators.at(key))) return false;
    }
  for (const auto& fw : cert.tuple_witnesses) {
    std::vector<const VPolytope*> sets;
    for (int i : fw.indices) sets.push_back(&family.sets[static_cast<std::size_t>(i)]);
    std::vector<VertexId> vs;
    for (int i : fw.indices) vs.push_back(verts[static_cast<std::size_t>(i)]);
    if (!k.contains(Simplex(vs))) return false;
    if (!verify_tuple_witness(sets, fw.witness)) return false;
  }
  for (const auto& nf : cert.tuple_refutations) {
    std::vector<const VPolytope*> sets;
    for (int i : nf.indices) sets.push_back(&family.sets[static_cast<std::size_t>(i)]);
    std::vector<VertexId> vs;
    for (int i : nf.indices) vs.push_back(verts[static_cast<std::size_t>(i)]);
    if (k.contains(Simplex(vs))) return false;
    if (!verify_tuple_refutation(sets, nf.refutation)) return false;
  }
  // Every face of K within max_dim must carry a witness.
  for (const Simplex& f : k.faces()) {
    if (f.dim() < 2 || f.dim() > cert.max_dim) continue;
    std::vector<int> idx;
    for (VertexId v : f.vertices()) {
      auto it = std::lower_bound(verts.begin(), verts.end(), v);
      idx.push_back(static_cast<int>(it - verts.begin()));
    }
    bool found = false;
    for (const auto& fw : cert.tuple_witnesses)
      if (fw.indices == idx) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ConvexFamily apply_certificates(ConvexFamily family, const CertifiedPattern& cert) {
  family.witnesses = cert.witnesses;
  family.separators = cert.separators;
  return family;
}

IndexedCover family_cover(const ConvexFamily& family) {
  IndexedCover cover;
  for (const VPolytope& s : family.sets) cover.elements.push_back(CoverElement::from_polytope(s));
  return cover;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t t) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MAPPERFORGE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 4));
}

struct TrialSetup {
  const SimplicialComplex& k;
  const PointCloud& x;
  int ambient;
  int cert_dim;
  std::vector<Simplex> faces_pos;   // dim >= 1, canonical order
  std::vector<VertexId> isolated;
  std::vector<Simplex> targets;     // faces_pos then isolated singletons
};

std::optional<ConvexCover> run_trial(const TrialSetup& setup, const SearchOptions& opts, int t) {
  std::mt19937_64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(t)));
  const std::vector<VertexId>& verts = setup.k.vertex_set();
  const std::size_t nv = verts.size();
  const std::size_t nf = setup.faces_pos.size();
  const std::size_t count = nv + nf;

  // Random distinct curve parameters: shuffle a spread-out pool.
  std::vector<long> pool(3 * count);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<long>(i + 1);
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng() % i]);

  auto jittered_curve_point = [&](long param) {
    RatVec p = moment_curve(Rat(param), setup.ambient);
    for (Rat& c : p) {
      long noise = static_cast<long>(rng() % 257) - 128; // [-128, 128]
      c += rat(noise, 128 * 16);
    }
    return p;
  };

  std::map<VertexId, RatVec> anchor;
  for (std::size_t i = 0; i < nv; ++i) anchor[verts[i]] = jittered_curve_point(pool[i]);
  std::map<Simplex, RatVec> witness;
  for (std::size_t j = 0; j < nf; ++j)
    witness[setup.faces_pos[j]] = jittered_curve_point(pool[nv + j]);

  // Fattening radius from the shrink schedule.
  Rat eps = opts.inflate;
  if (eps > 0 && opts.shrink_every > 0) {
    int steps = std::min(t / opts.shrink_every, 64);
    for (int s = 0; s < steps; ++s) eps *= opts.shrink_factor;
  }

  ConvexFamily family;
  family.ambient_dim = setup.ambient;
  for (VertexId v : verts) {
    std::vector<RatVec> core{anchor.at(v)};
    for (const Simplex& f : setup.faces_pos)
      if (f.contains(v)) core.push_back(witness.at(f));
    VPolytope set;
    if (eps > 0) {
      for (const RatVec& g : core)
        for (int axis = 0; axis < setup.ambient; ++axis)
          for (int sign : {-1, 1}) {
            RatVec bump = g;
            bump[static_cast<std::size_t>(axis)] += sign * eps;
            set.generators.push_back(std::move(bump));
          }
    } else {
      set.generators = core;
    }
    family.sets.push_back(std::move(set));
  }

  CertifyResult result = certify_family(family, setup.k, setup.cert_dim);
  auto* pattern = std::get_if<CertifiedPattern>(&result);
  if (!pattern) return std::nullopt;

  ConvexCover cover;
  cover.family = apply_certificates(std::move(family), *pattern);
  cover.certificate = std::move(*pattern);
  cover.trial = t;
  cover.lens.kind = Lens::Kind::TableToPoint;
  std::size_t next = 0;
  for (const PointCloud::Point& p : setup.x.points) {
    const Simplex& target = setup.targets[next];
    if (target.dim() >= 1)
      cover.lens.point_table.emplace(p.id, witness.at(target));
    else
      cover.lens.point_table.emplace(p.id, anchor.at(target.vertices()[0]));
    next = (next + 1) % setup.targets.size();
  }
  return cover;
}

} // namespace

ConvexSynthesisResult synthesize_convex_cover(const SimplicialComplex& k, const PointCloud& x,
                                              int d, const SearchOptions& opts) {
  if (d < 1) fail(Errc::BadInput, "target dimension must be >= 1");
  if (k.dimension() > d)
    fail(Errc::DimensionTooSmall,
         "complex dimension " + std::to_string(k.dimension()) + " exceeds target " +
             std::to_string(d));
  std::vector<Simplex> targets = synthesis_targets(k);
  if (targets.empty() && !x.points.empty())
    fail(Errc::BadInput, "complex has no faces; no lens can map a non-empty point cloud to it");
  if (x.points.size() < targets.size())
    throw InsufficientPointsError(static_cast<long>(targets.size()),
                                  static_cast<long>(x.points.size()));

  TrialSetup setup{k, x, 2 * d + 1, std::max(k.dimension(), 1), k.positive_faces(),
                   k.isolated_vertices(), targets};
  if (k.empty()) {
    // Nothing to cover: the empty family realizes the empty complex.
    ConvexCover cover;
    cover.family.ambient_dim = setup.ambient;
    cover.certificate.max_dim = setup.cert_dim;
    cover.lens.kind = Lens::Kind::TableToPoint;
    return cover;
  }

  const int threads = resolve_threads(opts.threads);
  for (int start = 0; start < opts.max_trials; start += threads) {
    const int batch = std::min(threads, opts.max_trials - start);
    std::vector<std::optional<ConvexCover>> results(static_cast<std::size_t>(batch));
    if (batch == 1) {
      results[0] = run_trial(setup, opts, start);
    } else {
      std::vector<std::thread> workers;
      workers.reserve(static_cast<std::size_t>(batch));
      for (int i = 0; i < batch; ++i)
        workers.emplace_back([&, i] { results[static_cast<std::size_t>(i)] =
                                          run_trial(setup, opts, start + i); });
      for (std::thread& w : workers) w.join();
    }
    // Lowest trial index wins, independent of thread scheduling.
    for (int i = 0; i < batch; ++i)
      if (results[static_cast<std::size_t>(i)])
        return std::move(*results[static_cast<std::size_t>(i)]);
  }
  return SearchExhausted{opts.max_trials};
}

} // namespace mapperforge
