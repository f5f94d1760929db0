#ifndef MAPPERFORGE_INVERSE_HPP
#define MAPPERFORGE_INVERSE_HPP

#include "mapperforge/complex.hpp"
#include "mapperforge/mapper.hpp"

namespace mapperforge {

/// Star cover and face-valued lens realizing a target complex.
struct StarParams {
  SimplicialComplex reference;
  IndexedCover cover; // star of each vertex, ascending
  Lens lens;          // table-to-face, surjective onto targets
};

/// Canonical lens-target list: faces of dimension >= 1 ordered by
/// (dimension, lexicographic vertex list), then isolated vertices ascending
/// as singleton faces.
std::vector<Simplex> synthesis_targets(const SimplicialComplex& k);

/// Builds the star cover of K and a lens hitting every target at least
/// once, assigning points to targets round-robin in cloud order.  Requires
/// |X| >= |targets|.
StarParams synthesize_star_params(const SimplicialComplex& k, const PointCloud& x);

/// Synthesizes, runs the trivial-clustering pipeline at max_dim = dim(K),
/// and returns the isomorphism certificate between the output and K.
IsoCertificate verify_round_trip(const SimplicialComplex& k, const PointCloud& x);

} // namespace mapperforge

#endif
