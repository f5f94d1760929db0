#include "mapperforge/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mapperforge/errors.hpp"

namespace mapperforge {

Rat lipschitz_constant_squared(const PointCloud& domain, const std::map<int, RatVec>& values) {
  if (domain.points.empty()) fail(Errc::BadInput, "lipschitz constant of empty data");
  Rat best = 0;
  for (std::size_t i = 0; i < domain.points.size(); ++i)
    for (std::size_t j = i + 1; j < domain.points.size(); ++j) {
      const auto& a = domain.points[i];
      const auto& b = domain.points[j];
      Rat dd = dist2(a.coords, b.coords);
      if (dd == 0)
        fail(Errc::DuplicateDomainPoints, "points " + std::to_string(a.id) + " and " +
                                              std::to_string(b.id) + " share coordinates");
      Rat vv = dist2(values.at(a.id), values.at(b.id));
      Rat ratio = vv / dd;
      if (ratio > best) best = ratio;
    }
  return best;
}

double lipschitz_constant(const PointCloud& domain, const std::map<int, RatVec>& values) {
  return std::sqrt(to_double(lipschitz_constant_squared(domain, values)));
}

LipschitzData LipschitzData::build(PointCloud domain, std::map<int, RatVec> values) {
  LipschitzData data;
  data.domain = std::move(domain);
  data.values = std::move(values);
  if (data.domain.points.empty()) fail(Errc::BadInput, "lipschitz data needs at least one point");
  for (const PointCloud::Point& p : data.domain.points) {
    auto it = data.values.find(p.id);
    if (it == data.values.end())
      fail(Errc::MissingLensEntry, "no value for point id " + std::to_string(p.id));
    if (data.value_dim == 0)
      data.value_dim = static_cast<int>(it->second.size());
    else if (static_cast<int>(it->second.size()) != data.value_dim)
      fail(Errc::DimensionMismatch, "value dimension mismatch at point " + std::to_string(p.id));
  }
  data.lip2 = lipschitz_constant_squared(data.domain, data.values);
  data.lip = std::sqrt(to_double(data.lip2));
  return data;
}

double SurdCoord::approx() const { return to_double(base) + std::sqrt(to_double(rad2)); }

Rat SurdCoord::lower(unsigned bits) const { return base + sqrt_lower(rad2, bits); }

std::vector<SurdCoord> mcshane_extend(const LipschitzData& data, const RatVec& y) {
  if (static_cast<int>(y.size()) != data.domain.ambient_dim)
    fail(Errc::DimensionMismatch, "query dimension mismatch");
  std::vector<SurdCoord> out(static_cast<std::size_t>(data.value_dim));
  for (int i = 0; i < data.value_dim; ++i) {
    std::optional<SurdCoord> best;
    for (const PointCloud::Point& p : data.domain.points) {
      SurdCoord cand{data.values.at(p.id)[static_cast<std::size_t>(i)],
                     data.lip2 * dist2(p.coords, y)};
      if (!best) {
        best = cand;
        continue;
      }
      int cmp = cmp_base_plus_sqrt(cand.base, cand.rad2, best->base, best->rad2);
      // Ties prefer the representation with the smaller radicand, so domain
      // points reproduce their stored values with rad2 = 0.
      if (cmp < 0 || (cmp == 0 && cand.rad2 < best->rad2)) best = cand;
    }
    out[static_cast<std::size_t>(i)] = *best;
  }
  return out;
}

std::vector<double> mcshane_extend_fp(const LipschitzData& data, const std::vector<double>& y) {
  std::vector<double> out(static_cast<std::size_t>(data.value_dim));
  std::vector<double> dists(data.domain.points.size());
  for (std::size_t p = 0; p < data.domain.points.size(); ++p) {
    double d2 = 0;
    const RatVec& c = data.domain.points[p].coords;
    for (std::size_t j = 0; j < c.size(); ++j) {
      double diff = to_double(c[j]) - y[j];
      d2 += diff * diff;
    }
    dists[p] = std::sqrt(d2);
  }
  for (int i = 0; i < data.value_dim; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < data.domain.points.size(); ++p) {
      double term =
          to_double(data.values.at(data.domain.points[p].id)[static_cast<std::size_t>(i)]) +
          data.lip * dists[p];
      best = std::min(best, term);
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

const SafetyRadii::Entry& SafetyRadii::at(int id) const {
  for (const Entry& e : entries)
    if (e.point_id == id) return e;
  fail(Errc::BadInput, "no safety radius for point id " + std::to_string(id));
}

SafetyRadii safety_radii(const LipschitzData& data, const ConvexFamily& omega) {
  if (data.value_dim != 3 || omega.ambient_dim != 3)
    fail(Errc::UnsupportedDimension, "safety radii need values and cover sets in R^3");
  if (data.lip2 == 0)
    fail(Errc::LipschitzZero, "safety radii are undefined for a zero Lipschitz constant");
  SafetyRadii out;
  for (const PointCloud::Point& p : data.domain.points) {
    const RatVec& v = data.values.at(p.id);
    Rat best_delta2 = 0;
    int best_set = -1;
    for (std::size_t s = 0; s < omega.sets.size(); ++s) {
      if (!vpolytope_contains(omega.sets[s], v)) continue;
      BoundaryDistance bd = distance_to_boundary(v, omega.sets[s]);
      if (best_set < 0 || bd.dist2 > best_delta2) {
        best_delta2 = bd.dist2;
        best_set = static_cast<int>(s);
      }
    }
    if (best_set < 0 || best_delta2 == 0) throw NotInInteriorError(p.id);
    Rat r2 = best_delta2 / (3 * data.lip2);
    out.entries.push_back(SafetyRadii::Entry{p.id, best_delta2, r2, best_set,
                                             std::sqrt(to_double(r2))});
  }
  return out;
}

StabilityReport verify_stability(const ConvexMapperParams& params, const SafetyRadii& radii,
                                 const PointCloud& new_points) {
  if (params.lens.kind != Lens::Kind::TableToPoint)
    fail(Errc::BadInput, "stability check needs a point-valued lens");
  // Every new point must land strictly inside some safety ball.
  std::vector<int> violations;
  for (const PointCloud::Point& q : new_points.points) {
    bool inside = false;
    for (const SafetyRadii::Entry& e : radii.entries) {
      const PointCloud::Point& center = params.x.at(e.point_id);
      if (dist2(q.coords, center.coords) < e.r2) {
        inside = true;
        break;
      }
    }
    if (!inside) violations.push_back(q.id);
  }
  if (!violations.empty()) throw PointOutsideUError(std::move(violations));

  LipschitzData data = LipschitzData::build(params.x, params.lens.point_table);

  Lens extended = params.lens;
  std::vector<PointCloud::Point> combined = params.x.points;
  for (const PointCloud::Point& q : new_points.points) {
    std::vector<SurdCoord> image = mcshane_extend(data, q.coords);
    RatVec approx;
    approx.reserve(image.size());
    for (const SurdCoord& c : image) approx.push_back(c.lower(64));
    extended.point_table[q.id] = std::move(approx);
    combined.push_back(q);
  }
  PointCloud merged = PointCloud::make(std::move(combined));

  IndexedCover cover = family_cover(params.family);
  StabilityReport report;
  report.base = mapper_trivial(params.x, params.lens, cover, params.max_dim);
  report.updated = mapper_trivial(merged, extended, cover, params.max_dim);

  std::set<std::vector<int>> before = provenance_pattern(report.base);
  std::set<std::vector<int>> after = provenance_pattern(report.updated);
  for (const auto& t : after)
    if (!before.count(t)) report.pattern_added.push_back(t);
  for (const auto& t : before)
    if (!after.count(t)) report.pattern_removed.push_back(t);
  report.stable = report.pattern_added.empty() && report.pattern_removed.empty();
  return report;
}

} // namespace mapperforge
