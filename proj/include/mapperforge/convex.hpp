#ifndef MAPPERFORGE_CONVEX_HPP
#define MAPPERFORGE_CONVEX_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mapperforge/rational.hpp"

namespace mapperforge {

/// (t, t^2, ..., t^n).
RatVec moment_curve(const Rat& t, int n);

/// Rank of the span of (p_i - p_0); the affine dimension of the point set.
int affine_rank(const std::vector<RatVec>& points);

/// True iff no point is an affine combination of the others.
bool affinely_independent(const std::vector<RatVec>& points);

/// Solves sum_j x_j * cols[j] = b exactly.  Returns nullopt when inconsistent;
/// free variables (if any) are set to zero.
std::optional<RatVec> solve_exact(const std::vector<RatVec>& cols, const RatVec& b);

/// Barycentric coordinates of q with respect to affinely independent points;
/// nullopt when q is outside their affine hull.
std::optional<RatVec> barycentric_coordinates(const RatVec& q, const std::vector<RatVec>& points);

/// Convex hull of a finite generator list (possibly redundant).
struct VPolytope {
  std::vector<RatVec> generators;
  int ambient_dim() const;
  static VPolytope box(const RatVec& lo, const RatVec& hi);
};

/// Exact point-in-hull test (rational LP feasibility).
bool vpolytope_contains(const VPolytope& p, const RatVec& q);

/// A common point of two hulls together with the convex combinations
/// realizing it in each.
struct PairWitness {
  RatVec point;
  RatVec lambda_a;
  RatVec lambda_b;
};

/// Strictly separating hyperplane: <normal, a> < offset < <normal, b> for all
/// generators a of the first set and b of the second.
struct Separator {
  RatVec normal;
  Rat offset;
};

using PairCertificate = std::variant<PairWitness, Separator>;

/// Decides hull intersection exactly and returns a verified certificate
/// either way.
PairCertificate polytope_intersection(const VPolytope& a, const VPolytope& b);

bool verify_pair_witness(const VPolytope& a, const VPolytope& b, const PairWitness& w);
bool verify_separator(const VPolytope& a, const VPolytope& b, const Separator& s);

/// Common point of several hulls with one convex combination per hull, plus
/// the Farkas refutation when the intersection is empty.
struct TupleWitness {
  RatVec point;
  RatMat lambdas;
};
struct TupleRefutation {
  RatVec farkas;
};
using TupleCertificate = std::variant<TupleWitness, TupleRefutation>;

TupleCertificate tuple_intersection(const std::vector<const VPolytope*>& sets);
bool verify_tuple_witness(const std::vector<const VPolytope*>& sets, const TupleWitness& w);
bool verify_tuple_refutation(const std::vector<const VPolytope*>& sets, const TupleRefutation& r);

/// Supporting halfspace <normal, x> <= offset of a full-dimensional polytope.
struct Facet {
  RatVec normal;
  Rat offset;
};

/// Facet halfspaces of a full-dimensional polytope in R^3, computed exactly
/// from generator triples.
std::vector<Facet> facets_3d(const VPolytope& c);

struct BoundaryDistance {
  Rat dist2;    // exact squared distance
  double value; // convenience mirror
};

/// Distance from an interior/boundary point of C to the boundary of C.
/// C must live in R^3; degenerate (lower-dimensional) hulls give zero.
BoundaryDistance distance_to_boundary(const RatVec& p, const VPolytope& c);

/// Ordered family of convex sets with exact pairwise intersection
/// certificates.  Every unordered index pair appears in exactly one of
/// witnesses/separators once certified.
struct ConvexFamily {
  int ambient_dim = 0;
  std::vector<VPolytope> sets;
  std::map<std::pair<int, int>, PairWitness> witnesses;
  std::map<std::pair<int, int>, Separator> separators;
};

} // namespace mapperforge

#endif
