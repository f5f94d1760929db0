// Brute-force reference implementations used only by the test suites.  They
// stay independent of the library code paths they check.
#ifndef MAPPERFORGE_TESTS_ORACLES_HPP
#define MAPPERFORGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mapperforge/complex.hpp"
#include "mapperforge/convex.hpp"
#include "mapperforge/mapper.hpp"

namespace mapperforge::testing {

// Nerve by enumerating every subfamily.
inline SimplicialComplex oracle_nerve(const std::vector<std::vector<int>>& family, int max_dim) {
  std::vector<Simplex> faces;
  const std::size_t m = family.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<VertexId> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(static_cast<VertexId>(i));
    if (static_cast<int>(idx.size()) > max_dim + 1) continue;
    std::set<int> common(family[static_cast<std::size_t>(idx[0])].begin(),
                         family[static_cast<std::size_t>(idx[0])].end());
    for (std::size_t k = 1; k < idx.size() && !common.empty(); ++k) {
      std::set<int> next;
      for (int id : family[static_cast<std::size_t>(idx[k])])
        if (common.count(id)) next.insert(id);
      common = std::move(next);
    }
    if (!common.empty()) faces.emplace_back(idx);
  }
  if (faces.empty()) return SimplicialComplex();
  return SimplicialComplex::from_simplices(faces);
}

// Isomorphism by trying every vertex bijection.
inline bool oracle_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_set().size() != b.vertex_set().size()) return false;
  if (a.face_counts_by_dim() != b.face_counts_by_dim()) return false;
  if (a.empty() && b.empty()) return true;
  std::vector<VertexId> va = a.vertex_set();
  std::vector<VertexId> perm = b.vertex_set();
  std::sort(perm.begin(), perm.end());
  do {
    IsoCertificate cert;
    for (std::size_t i = 0; i < va.size(); ++i) cert.mapping[va[i]] = perm[i];
    if (verify_isomorphism(a, b, cert)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Single linkage as breadth-first component growth over the epsilon graph.
inline std::vector<std::vector<int>> oracle_single_linkage(const std::vector<int>& ids,
                                                           const PointCloud& x, const Rat& eps) {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  Rat eps2 = eps * eps;
  std::vector<bool> used(sorted.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (used[s]) continue;
    std::vector<std::size_t> queue{s};
    used[s] = true;
    std::vector<int> comp;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      comp.push_back(sorted[cur]);
      for (std::size_t t = 0; t < sorted.size(); ++t) {
        if (used[t]) continue;
        if (dist2(x.at(sorted[cur]).coords, x.at(sorted[t]).coords) <= eps2) {
          used[t] = true;
          queue.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

// Exact point-in-hull by Caratheodory enumeration: q is in the hull iff some
// affinely independent generator subset of size <= dim+1 contains it.
inline bool oracle_contains(const std::vector<RatVec>& generators, const RatVec& q) {
  const int dim = static_cast<int>(q.size());
  const std::size_t n = generators.size();
  std::vector<std::size_t> idx;
  auto try_subset = [&](const std::vector<std::size_t>& subset) {
    std::vector<RatVec> pts;
    for (std::size_t i : subset) pts.push_back(generators[i]);
    if (!affinely_independent(pts)) return false;
    auto bc = barycentric_coordinates(q, pts);
    if (!bc) return false;
    for (const Rat& c : *bc)
      if (c < 0) return false;
    return true;
  };
  bool found = false;
  auto recurse = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (found) return;
    if (!idx.empty() && try_subset(idx)) {
      found = true;
      return;
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1, remaining - 1);
      idx.pop_back();
      if (found) return;
    }
  };
  recurse(recurse, 0, dim + 1);
  return found;
}

// Hulls intersect iff the origin lies in the hull of pairwise differences.
inline bool oracle_pair_intersects(const VPolytope& a, const VPolytope& b) {
  std::vector<RatVec> diffs;
  for (const RatVec& ga : a.generators)
    for (const RatVec& gb : b.generators) diffs.push_back(vec_sub(ga, gb));
  RatVec origin(static_cast<std::size_t>(a.ambient_dim()), Rat(0));
  return oracle_contains(diffs, origin);
}

// Upper bound on the boundary distance by shooting rays from p and
// bisecting the exit point; refines toward the true distance.
inline double oracle_boundary_distance_upper(const VPolytope& c, const RatVec& p, int n_dirs,
                                             int n_bisect, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  const int dim = c.ambient_dim();
  for (int d = 0; d < n_dirs; ++d) {
    RatVec dir(static_cast<std::size_t>(dim));
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      long v = static_cast<long>(rng() % 41) - 20;
      dir[static_cast<std::size_t>(i)] = Rat(v);
      if (v != 0) zero = false;
    }
    if (zero) continue;
    // Find an outside scale, then bisect the boundary crossing.
    Rat hi = 1;
    int guard = 0;
    while (oracle_contains(c.generators, vec_add(p, vec_scale(hi, dir))) && guard++ < 64) hi *= 2;
    if (guard >= 64) continue; // unbounded direction cannot happen for hulls
    Rat lo = 0;
    for (int step = 0; step < n_bisect; ++step) {
      Rat mid = (lo + hi) / 2;
      if (oracle_contains(c.generators, vec_add(p, vec_scale(mid, dir))))
        lo = mid;
      else
        hi = mid;
    }
    double len = std::sqrt(to_double(norm2(dir)));
    best = std::min(best, to_double(hi) * len);
  }
  return best;
}

} // namespace mapperforge::testing

#endif
