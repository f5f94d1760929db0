#ifndef MAPPERFORGE_EXTENSION_HPP
#define MAPPERFORGE_EXTENSION_HPP

#include "mapperforge/convex.hpp"
#include "mapperforge/geometry.hpp"
#include "mapperforge/mapper.hpp"

namespace mapperforge {

/// Finite Lipschitz map: domain points in R^n, values in R^d, with the exact
/// squared Lipschitz constant.
struct LipschitzData {
  PointCloud domain;
  std::map<int, RatVec> values;
  int value_dim = 0;
  Rat lip2 = 0;   // exact L^2
  double lip = 0; // sqrt mirror

  static LipschitzData build(PointCloud domain, std::map<int, RatVec> values);
};

/// Exact max over pairs of |f(x)-f(y)|^2 / |x-y|^2 (zero for singletons).
/// Throws DuplicateDomainPoints when two ids share coordinates.
Rat lipschitz_constant_squared(const PointCloud& domain, const std::map<int, RatVec>& values);
double lipschitz_constant(const PointCloud& domain, const std::map<int, RatVec>& values);

/// One coordinate of the inf-formula extension: base + sqrt(rad2).
struct SurdCoord {
  Rat base;
  Rat rad2;
  double approx() const;
  /// Rational value within 2^-bits below the exact one.
  Rat lower(unsigned bits) const;
};

/// Coordinate-wise minimum of f_i(x) + L*|x - y| over the domain, evaluated
/// exactly at a rational query point.  Restricting to the domain reproduces
/// the data values with rad2 = 0.
std::vector<SurdCoord> mcshane_extend(const LipschitzData& data, const RatVec& y);

/// Floating-point evaluation for sampling.
std::vector<double> mcshane_extend_fp(const LipschitzData& data, const std::vector<double>& y);

/// Per-point safe radii: the ball B(x_i, r_i) maps into a single convex set
/// of omega under the extension, with r_i^2 = delta_i^2 / (3 L^2) exact.
struct SafetyRadii {
  struct Entry {
    int point_id;
    Rat delta2;         // squared distance to the chosen set's boundary
    Rat r2;             // exact squared radius
    int containing_set; // index into omega.sets
    double r_fp;
  };
  std::vector<Entry> entries; // in domain cloud order
  const Entry& at(int id) const;
};

/// Requires values in R^3, omega in R^3, and L > 0; each value must be
/// interior to some set of omega (else NotInInterior).
SafetyRadii safety_radii(const LipschitzData& data, const ConvexFamily& omega);

/// Convex-cover Mapper parameters, as produced by the convex synthesis.
struct ConvexMapperParams {
  PointCloud x;
  Lens lens; // table-to-point
  ConvexFamily family;
  int max_dim = 1;
};

struct StabilityReport {
  bool stable = false;
  MapperOutput base;
  MapperOutput updated;
  std::vector<std::vector<int>> pattern_added;   // cover-index tuples
  std::vector<std::vector<int>> pattern_removed;
};

/// Extends the lens to the new points via the inf-formula, reruns the
/// trivial-clustering pipeline over the same family, and compares the
/// cover-level patterns.  New points outside every safety ball raise
/// PointOutsideU listing them.
StabilityReport verify_stability(const ConvexMapperParams& params, const SafetyRadii& radii,
                                 const PointCloud& new_points);

} // namespace mapperforge

#endif
