#ifndef MAPPERFORGE_IO_HPP
#define MAPPERFORGE_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mapperforge/complex.hpp"
#include "mapperforge/extension.hpp"
#include "mapperforge/geometry.hpp"
#include "mapperforge/inverse.hpp"
#include "mapperforge/mapper.hpp"

namespace mapperforge {

using Json = nlohmann::json;

// ---- complexes --------------------------------------------------------
// {"faces": [[0,1],[1,2],[3]]}: facet list, closure implied.
Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j); // also accepts {"complex": {...}}
std::string complex_to_dot(const SimplicialComplex& k);

// ---- point clouds (CSV, header "id,x0,x1,...") ------------------------
PointCloud point_cloud_from_csv(std::istream& in);
PointCloud point_cloud_from_csv_string(const std::string& text);
std::string point_cloud_to_csv(const PointCloud& x);

// ---- lenses ------------------------------------------------------------
Json lens_to_json(const Lens& f);
Lens lens_from_json(const Json& j);

// ---- covers -------------------------------------------------------------
Json cover_to_json(const IndexedCover& cover);
IndexedCover cover_from_json(const Json& j);

// ---- mapper output -------------------------------------------------------
Json mapper_output_to_json(const MapperOutput& out);
std::string mapper_output_to_dot(const MapperOutput& out);

// ---- convex families and certificates -------------------------------------
Json family_to_json(const ConvexFamily& family);
ConvexFamily family_from_json(const Json& j);
Json pattern_to_json(const CertifiedPattern& cert);

// ---- star params -----------------------------------------------------------
Json star_params_to_json(const StarParams& params);

// ---- isomorphism certificates ----------------------------------------------
Json iso_to_json(const IsoCertificate& cert);

// ---- lipschitz data {"points":[{"id","coords","value"}]} --------------------
Json lipschitz_to_json(const LipschitzData& data);
LipschitzData lipschitz_from_json(const Json& j);

// ---- safety radii -------------------------------------------------------
Json radii_to_json(const SafetyRadii& radii);
SafetyRadii radii_from_json(const Json& j);

// ---- files and digests -----------------------------------------------------
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string json_dumps(const Json& j); // 2-space indent, trailing newline
std::string fnv1a_hex(const std::string& content);

// rational <-> json helpers
Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

} // namespace mapperforge

#endif
