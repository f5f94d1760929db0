// Enumeration of small graphs up to isomorphism, for exhaustive tests.
#ifndef MAPPERFORGE_TESTS_GRAPHGEN_HPP
#define MAPPERFORGE_TESTS_GRAPHGEN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mapperforge/complex.hpp"

namespace mapperforge::testing {

// Pairs (i, j) with i < j < n, indexed lexicographically.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// One canonical edge mask per isomorphism class of graphs on n labeled
// vertices, found by exhausting vertex permutations per orbit.
inline std::vector<std::uint32_t> graph_classes(int n) {
  const auto pairs = vertex_pairs(n);
  const int np = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int p = 0; p < np; ++p) {
    pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)] = p;
    pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)] = p;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint32_t total = std::uint32_t{1} << np;
  std::vector<bool> seen(total, false);
  std::vector<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::uint32_t canon = mask;
    for (const auto& pi : perms) {
      std::uint32_t mapped = 0;
      for (int p = 0; p < np; ++p) {
        if (!(mask & (std::uint32_t{1} << p))) continue;
        int a = pi[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)];
        int b = pi[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)];
        mapped |= std::uint32_t{1} << pair_index[static_cast<std::size_t>(a)]
                                                [static_cast<std::size_t>(b)];
      }
      seen[mapped] = true;
      canon = std::min(canon, mapped);
    }
    classes.push_back(canon);
  }
  return classes;
}

// Graph as a complex: every vertex plus the masked edges.
inline SimplicialComplex graph_complex(int n, std::uint32_t mask) {
  const auto pairs = vertex_pairs(n);
  std::vector<std::vector<VertexId>> faces;
  for (int v = 0; v < n; ++v) faces.push_back({v});
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
    if (mask & (std::uint32_t{1} << p))
      faces.push_back({pairs[static_cast<std::size_t>(p)].first,
                       pairs[static_cast<std::size_t>(p)].second});
  return SimplicialComplex::from_faces(faces);
}

} // namespace mapperforge::testing

#endif
