#ifndef MAPPERFORGE_GEOMETRY_HPP
#define MAPPERFORGE_GEOMETRY_HPP

#include <cstdint>
#include <variant>

#include "mapperforge/complex.hpp"
#include "mapperforge/convex.hpp"
#include "mapperforge/mapper.hpp"

namespace mapperforge {

struct EmbeddingConfig {
  std::map<VertexId, Rat> parameters; // pairwise distinct curve parameters
  int ambient_dim = 3;                // 2d+1 for target dimension d
};

struct ComplexEmbedding {
  EmbeddingConfig config;
  std::map<VertexId, RatVec> points;
};

/// Realizes the vertices of K on the moment curve in R^{2d+1} and checks
/// that every (2d+2)-subset of vertex images is affinely independent, so
/// realizations of faces meet exactly in shared faces.
ComplexEmbedding embed_complex(const SimplicialComplex& k, int d);

/// Open geometric stars of a moment-curve realization, with a lens sending
/// points to face barycenters (round-robin over the canonical target list).
struct GeometricStarCover {
  IndexedCover cover; // one geometric-star element per vertex, ascending
  Lens lens;          // table-to-point
  ComplexEmbedding embedding;
};
GeometricStarCover geometric_star_cover(const SimplicialComplex& k, const PointCloud& x, int d);

/// Full intersection-pattern certificate for a convex family against a
/// target complex: pairwise witnesses/separators plus k-wise witnesses for
/// higher faces and Farkas refutations for probed non-faces.
struct CertifiedPattern {
  int max_dim = 1;
  std::map<std::pair<int, int>, PairWitness> witnesses;
  std::map<std::pair<int, int>, Separator> separators;
  struct FaceWitness {
    std::vector<int> indices;
    TupleWitness witness;
  };
  std::vector<FaceWitness> tuple_witnesses;
  struct NonFaceRefutation {
    std::vector<int> indices;
    TupleRefutation refutation;
  };
  std::vector<NonFaceRefutation> tuple_refutations;
};

struct PatternMismatch {
  std::vector<int> tuple;       // family indices
  bool expected_nonempty = false;
};

using CertifyResult = std::variant<CertifiedPattern, PatternMismatch>;

/// Checks that sets[i] <-> i-th smallest vertex of K realize exactly K's
/// intersection pattern up to max_dim.  Every certificate is exact.
CertifyResult certify_family(const ConvexFamily& family, const SimplicialComplex& k, int max_dim);

/// Re-verifies a certificate arithmetically against the family and the
/// target pattern, without rerunning any LP pivoting for witnesses.
bool verify_family_certificates(const ConvexFamily& family, const SimplicialComplex& k,
                                const CertifiedPattern& cert);

/// Copies pairwise certificates from a certification result into the family.
ConvexFamily apply_certificates(ConvexFamily family, const CertifiedPattern& cert);

/// Cover made of polytope-shaped elements, one per family set, in order.
IndexedCover family_cover(const ConvexFamily& family);

struct SearchOptions {
  std::uint64_t seed = 0;
  int max_trials = 10000;
  Rat inflate = 0;              // initial fattening radius; 0 keeps bare hulls
  Rat shrink_factor = Rat(1, 2);
  int shrink_every = 16;        // trials between fattening shrinks
  int threads = 0;              // 0 = MAPPERFORGE_THREADS or hardware default
};

struct ConvexCover {
  ConvexFamily family;          // pair certificates filled
  CertifiedPattern certificate;
  Lens lens;                    // table-to-point over the supplied cloud
  int trial = 0;                // accepted trial index
};

struct SearchExhausted {
  int trials = 0;
};

using ConvexSynthesisResult = std::variant<ConvexCover, SearchExhausted>;

/// Randomized search for a certified convex cover in R^{2d+1} whose nerve is
/// K: witnesses for every face of dimension >= 1 are placed on a jittered
/// moment curve, each vertex set is the hull of its own anchor plus its
/// incident face witnesses (optionally fattened by `inflate`), and a trial
/// is accepted only when certify_family passes.  Same seed, same output.
ConvexSynthesisResult synthesize_convex_cover(const SimplicialComplex& k, const PointCloud& x,
                                              int d, const SearchOptions& opts = {});

} // namespace mapperforge

#endif
