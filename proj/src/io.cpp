#include "mapperforge/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mapperforge/errors.hpp"

namespace mapperforge {

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rat_to_string(q));
  return out;
}

RatVec rat_vec_from_json(const Json& j) {
  RatVec out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(rat_from_string(e.get<std::string>()));
    else if (e.is_number_integer())
      out.push_back(Rat(static_cast<long>(e.get<long long>())));
    else
      fail(Errc::BadInput, "expected rational as \"p/q\" string or integer");
  }
  return out;
}

Json complex_to_json(const SimplicialComplex& k) {
  Json faces = Json::array();
  for (const Simplex& f : k.facets()) faces.push_back(f.vertices());
  return Json{{"faces", faces}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json* node = &j;
  if (j.is_object() && j.contains("complex")) node = &j.at("complex");
  if (!node->is_object() || !node->contains("faces"))
    fail(Errc::BadInput, "complex JSON needs a \"faces\" array");
  std::vector<std::vector<VertexId>> raw;
  for (const auto& f : node->at("faces")) raw.push_back(f.get<std::vector<VertexId>>());
  return SimplicialComplex::from_faces(raw);
}

std::string complex_to_dot(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "graph complex {\n";
  for (VertexId v : k.vertex_set()) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const Simplex& f : k.faces())
    if (f.dim() == 1) out << "  v" << f.vertices()[0] << " -- v" << f.vertices()[1] << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

} // namespace

PointCloud point_cloud_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(Errc::BadInput, "empty point cloud file");
  std::vector<std::string> header = split(trim(line), ',');
  if (header.empty() || trim(header[0]) != "id")
    fail(Errc::BadInput, "point cloud header must start with \"id\"");
  const std::size_t ncols = header.size();
  std::vector<PointCloud::Point> pts;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> cells = split(t, ',');
    if (cells.size() != ncols)
      fail(Errc::BadInput, "point cloud row has " + std::to_string(cells.size()) +
                               " cells, expected " + std::to_string(ncols));
    PointCloud::Point p;
    p.id = std::stoi(trim(cells[0]));
    for (std::size_t i = 1; i < ncols; ++i) p.coords.push_back(rat_from_string(trim(cells[i])));
    pts.push_back(std::move(p));
  }
  return PointCloud::make(std::move(pts));
}

PointCloud point_cloud_from_csv_string(const std::string& text) {
  std::istringstream in(text);
  return point_cloud_from_csv(in);
}

std::string point_cloud_to_csv(const PointCloud& x) {
  std::ostringstream out;
  out << "id";
  for (int i = 0; i < x.ambient_dim; ++i) out << ",x" << i;
  out << "\n";
  for (const PointCloud::Point& p : x.points) {
    out << p.id;
    for (const Rat& c : p.coords) out << "," << rat_to_string(c);
    out << "\n";
  }
  return out.str();
}

Json lens_to_json(const Lens& f) {
  Json j;
  switch (f.kind) {
    case Lens::Kind::TableToFace: {
      j["kind"] = "table-to-face";
      Json table = Json::object();
      for (const auto& [id, face] : f.face_table) table[std::to_string(id)] = face.vertices();
      j["table"] = table;
      break;
    }
    case Lens::Kind::TableToPoint: {
      j["kind"] = "table-to-point";
      Json table = Json::object();
      Json table_fp = Json::object();
      for (const auto& [id, pt] : f.point_table) {
        table[std::to_string(id)] = rat_vec_to_json(pt);
        table_fp[std::to_string(id)] = to_double_vec(pt);
      }
      j["table"] = table;
      j["table_fp"] = table_fp;
      break;
    }
    case Lens::Kind::CoordinateProjection:
      j["kind"] = "coordinate-projection";
      j["axis"] = f.axis;
      break;
  }
  return j;
}

Lens lens_from_json(const Json& j) {
  Lens f;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "table-to-face") {
    f.kind = Lens::Kind::TableToFace;
    for (const auto& [key, value] : j.at("table").items())
      f.face_table.emplace(std::stoi(key), Simplex(value.get<std::vector<VertexId>>()));
  } else if (kind == "table-to-point") {
    f.kind = Lens::Kind::TableToPoint;
    for (const auto& [key, value] : j.at("table").items())
      f.point_table.emplace(std::stoi(key), rat_vec_from_json(value));
  } else if (kind == "coordinate-projection") {
    f.kind = Lens::Kind::CoordinateProjection;
    f.axis = j.at("axis").get<int>();
  } else {
    fail(Errc::BadInput, "unknown lens kind: " + kind);
  }
  return f;
}

Json cover_to_json(const IndexedCover& cover) {
  Json out = Json::array();
  for (const CoverElement& u : cover.elements) {
    Json e;
    switch (u.shape) {
      case CoverElement::Shape::StarOfVertex:
        e["shape"] = "star";
        e["vertex"] = u.star_vertex;
        break;
      case CoverElement::Shape::Interval:
        e["shape"] = "interval";
        e["min"] = rat_to_string(u.lo);
        e["max"] = rat_to_string(u.hi);
        break;
      case CoverElement::Shape::Box:
        e["shape"] = "box";
        e["min"] = rat_vec_to_json(u.box_min);
        e["max"] = rat_vec_to_json(u.box_max);
        break;
      case CoverElement::Shape::Polytope: {
        e["shape"] = "vpolytope";
        Json gens = Json::array();
        for (const RatVec& g : u.polytope.generators) gens.push_back(rat_vec_to_json(g));
        e["generators"] = gens;
        break;
      }
      case CoverElement::Shape::PointIdSet:
        e["shape"] = "point-set";
        e["ids"] = u.point_ids;
        break;
      case CoverElement::Shape::GeometricStar: {
        e["shape"] = "geometric-star";
        e["apex"] = u.star_body.apex;
        Json pieces = Json::array();
        for (const auto& piece : u.star_body.pieces) {
          Json pj;
          pj["vertices"] = piece.vertices;
          Json pts = Json::array();
          for (const RatVec& p : piece.points) pts.push_back(rat_vec_to_json(p));
          pj["points"] = pts;
          pieces.push_back(pj);
        }
        e["pieces"] = pieces;
        break;
      }
    }
    out.push_back(e);
  }
  return out;
}

IndexedCover cover_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("cover")) list = &j.at("cover");
  if (!list->is_array()) fail(Errc::BadInput, "cover JSON must be an array of shape records");
  IndexedCover cover;
  for (const auto& e : *list) {
    std::string shape = e.at("shape").get<std::string>();
    if (shape == "star") {
      cover.elements.push_back(CoverElement::star(e.at("vertex").get<VertexId>()));
    } else if (shape == "interval") {
      cover.elements.push_back(
          CoverElement::interval(rat_from_string(e.at("min").get<std::string>()),
                                 rat_from_string(e.at("max").get<std::string>())));
    } else if (shape == "box") {
      cover.elements.push_back(CoverElement::box(rat_vec_from_json(e.at("min")),
                                                 rat_vec_from_json(e.at("max"))));
    } else if (shape == "vpolytope") {
      VPolytope p;
      for (const auto& g : e.at("generators")) p.generators.push_back(rat_vec_from_json(g));
      cover.elements.push_back(CoverElement::from_polytope(std::move(p)));
    } else if (shape == "point-set") {
      cover.elements.push_back(CoverElement::point_set(e.at("ids").get<std::vector<int>>()));
    } else if (shape == "geometric-star") {
      GeometricStarShape body;
      body.apex = e.at("apex").get<VertexId>();
      for (const auto& pj : e.at("pieces")) {
        GeometricStarShape::Piece piece;
        piece.vertices = pj.at("vertices").get<std::vector<VertexId>>();
        for (const auto& p : pj.at("points")) piece.points.push_back(rat_vec_from_json(p));
        body.pieces.push_back(std::move(piece));
      }
      cover.elements.push_back(CoverElement::geometric_star(std::move(body)));
    } else {
      fail(Errc::BadInput, "unknown cover shape: " + shape);
    }
  }
  return cover;
}

Json mapper_output_to_json(const MapperOutput& out) {
  Json prov = Json::array();
  for (const auto& info : out.provenance) {
    prov.push_back(Json{{"vertex", info.vertex},
                        {"cover_index", info.cover_index},
                        {"cluster", info.cluster},
                        {"members", info.members}});
  }
  return Json{{"complex", complex_to_json(out.complex)}, {"provenance", prov}};
}

std::string mapper_output_to_dot(const MapperOutput& out) {
  std::ostringstream dot;
  dot << "graph mapper {\n  node [shape=ellipse];\n";
  for (const auto& info : out.provenance) {
    dot << "  v" << info.vertex << " [label=\"U" << info.cover_index;
    if (info.cluster > 0) dot << "." << info.cluster;
    dot << ": ";
    for (std::size_t i = 0; i < info.members.size(); ++i) {
      if (i) dot << ",";
      dot << info.members[i];
    }
    dot << "\"];\n";
  }
  for (const Simplex& f : out.complex.faces())
    if (f.dim() == 1) dot << "  v" << f.vertices()[0] << " -- v" << f.vertices()[1] << ";\n";
  dot << "}\n";
  return dot.str();
}

Json family_to_json(const ConvexFamily& family) {
  Json sets = Json::array();
  for (const VPolytope& s : family.sets) {
    Json gens = Json::array();
    Json gens_fp = Json::array();
    for (const RatVec& g : s.generators) {
      gens.push_back(rat_vec_to_json(g));
      gens_fp.push_back(to_double_vec(g));
    }
    sets.push_back(Json{{"generators", gens}, {"generators_fp", gens_fp}});
  }
  Json witnesses = Json::array();
  for (const auto& [pair, w] : family.witnesses) {
    witnesses.push_back(Json{{"pair", {pair.first, pair.second}},
                             {"point", rat_vec_to_json(w.point)},
                             {"point_fp", to_double_vec(w.point)},
                             {"lambda_a", rat_vec_to_json(w.lambda_a)},
                             {"lambda_b", rat_vec_to_json(w.lambda_b)}});
  }
  Json separators = Json::array();
  for (const auto& [pair, s] : family.separators) {
    separators.push_back(Json{{"pair", {pair.first, pair.second}},
                              {"normal", rat_vec_to_json(s.normal)},
                              {"normal_fp", to_double_vec(s.normal)},
                              {"offset", rat_to_string(s.offset)},
                              {"offset_fp", to_double(s.offset)}});
  }
  return Json{{"ambient_dim", family.ambient_dim},
              {"sets", sets},
              {"witnesses", witnesses},
              {"separators", separators}};
}

ConvexFamily family_from_json(const Json& j) {
  ConvexFamily family;
  family.ambient_dim = j.at("ambient_dim").get<int>();
  for (const auto& s : j.at("sets")) {
    VPolytope p;
    for (const auto& g : s.at("generators")) p.generators.push_back(rat_vec_from_json(g));
    family.sets.push_back(std::move(p));
  }
  if (j.contains("witnesses"))
    for (const auto& w : j.at("witnesses")) {
      PairWitness pw;
      pw.point = rat_vec_from_json(w.at("point"));
      pw.lambda_a = rat_vec_from_json(w.at("lambda_a"));
      pw.lambda_b = rat_vec_from_json(w.at("lambda_b"));
      auto pair = w.at("pair").get<std::vector<int>>();
      family.witnesses.emplace(std::make_pair(pair.at(0), pair.at(1)), std::move(pw));
    }
  if (j.contains("separators"))
    for (const auto& s : j.at("separators")) {
      Separator sep;
      sep.normal = rat_vec_from_json(s.at("normal"));
      sep.offset = rat_from_string(s.at("offset").get<std::string>());
      auto pair = s.at("pair").get<std::vector<int>>();
      family.separators.emplace(std::make_pair(pair.at(0), pair.at(1)), std::move(sep));
    }
  return family;
}

Json pattern_to_json(const CertifiedPattern& cert) {
  Json tuples = Json::array();
  for (const auto& fw : cert.tuple_witnesses)
    tuples.push_back(Json{{"indices", fw.indices},
                          {"point", rat_vec_to_json(fw.witness.point)},
                          {"point_fp", to_double_vec(fw.witness.point)}});
  Json refutations = Json::array();
  for (const auto& nf : cert.tuple_refutations)
    refutations.push_back(Json{{"indices", nf.indices},
                               {"farkas", rat_vec_to_json(nf.refutation.farkas)}});
  return Json{{"max_dim", cert.max_dim},
              {"witness_pairs", cert.witnesses.size()},
              {"separator_pairs", cert.separators.size()},
              {"tuple_witnesses", tuples},
              {"tuple_refutations", refutations}};
}

Json star_params_to_json(const StarParams& params) {
  return Json{{"reference", complex_to_json(params.reference)},
              {"cover", cover_to_json(params.cover)},
              {"lens", lens_to_json(params.lens)}};
}

Json iso_to_json(const IsoCertificate& cert) {
  Json mapping = Json::object();
  for (const auto& [a, b] : cert.mapping) mapping[std::to_string(a)] = b;
  return Json{{"isomorphic", true}, {"mapping", mapping}};
}

Json lipschitz_to_json(const LipschitzData& data) {
  Json pts = Json::array();
  for (const PointCloud::Point& p : data.domain.points)
    pts.push_back(Json{{"id", p.id},
                       {"coords", rat_vec_to_json(p.coords)},
                       {"value", rat_vec_to_json(data.values.at(p.id))}});
  return Json{{"points", pts},
              {"lip2", rat_to_string(data.lip2)},
              {"lip_fp", data.lip}};
}

LipschitzData lipschitz_from_json(const Json& j) {
  std::vector<PointCloud::Point> pts;
  std::map<int, RatVec> values;
  for (const auto& p : j.at("points")) {
    PointCloud::Point pt;
    pt.id = p.at("id").get<int>();
    pt.coords = rat_vec_from_json(p.at("coords"));
    values[pt.id] = rat_vec_from_json(p.at("value"));
    pts.push_back(std::move(pt));
  }
  return LipschitzData::build(PointCloud::make(std::move(pts)), std::move(values));
}

Json radii_to_json(const SafetyRadii& radii) {
  Json entries = Json::array();
  for (const auto& e : radii.entries)
    entries.push_back(Json{{"point_id", e.point_id},
                           {"delta2", rat_to_string(e.delta2)},
                           {"r2", rat_to_string(e.r2)},
                           {"containing_set", e.containing_set},
                           {"r_fp", e.r_fp}});
  return Json{{"entries", entries}};
}

SafetyRadii radii_from_json(const Json& j) {
  SafetyRadii radii;
  for (const auto& e : j.at("entries"))
    radii.entries.push_back(SafetyRadii::Entry{
        e.at("point_id").get<int>(), rat_from_string(e.at("delta2").get<std::string>()),
        rat_from_string(e.at("r2").get<std::string>()), e.at("containing_set").get<int>(),
        e.at("r_fp").get<double>()});
  return radii;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::BadInput, "cannot write file: " + path);
  out << content;
}

std::string json_dumps(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_hex(const std::string& content) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

} // namespace mapperforge
