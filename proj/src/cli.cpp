#include "mapperforge/cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "mapperforge/errors.hpp"
#include "mapperforge/extension.hpp"
#include "mapperforge/geometry.hpp"
#include "mapperforge/inverse.hpp"
#include "mapperforge/io.hpp"

namespace mapperforge {

namespace {

constexpr const char* kVersion = "0.1.0";

struct ExitWithCode {
  int code;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::IncompatibleCoverShape:
      return 3;
    case Errc::InsufficientPoints:
      return 5;
    case Errc::RoundTripFailed:
      return 70;
    default:
      return 2;
  }
}

struct ManifestBuilder {
  Json inputs = Json::object();
  std::string command;
  Json extras = Json::object();

  std::string load(const std::string& path) {
    std::string content = read_file(path);
    inputs[path] = "fnv1a:" + fnv1a_hex(content);
    return content;
  }

  void write(const std::string& out_dir, const std::string& outcome) const {
    Json manifest{{"command", command},
                  {"inputs", inputs},
                  {"outcome", outcome},
                  {"version", kVersion}};
    for (const auto& [key, value] : extras.items()) manifest[key] = value;
    write_file(out_dir + "/manifest.json", json_dumps(manifest));
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "mapperforge";
  for (const std::string& a : args) s += " " + a;
  return s;
}

void ensure_dir(const std::string& dir) { std::filesystem::create_directories(dir); }

struct MapperArgs {
  std::string points_path, lens_path, cover_path;
  std::string clustering = "trivial";
  std::string epsilon = "0";
  int max_dim = 1;
  std::string out_dir = ".";
  std::string format = "both";
};

int cmd_mapper(const MapperArgs& a, ManifestBuilder& manifest) {
  PointCloud x = point_cloud_from_csv_string(manifest.load(a.points_path));
  Lens lens = lens_from_json(Json::parse(manifest.load(a.lens_path)));
  IndexedCover cover = cover_from_json(Json::parse(manifest.load(a.cover_path)));
  ClusterMethod method = a.clustering == "single-linkage"
                             ? ClusterMethod::single_linkage(rat_from_string(a.epsilon))
                             : ClusterMethod::trivial();
  MapperOutput out = mapper_run(x, lens, cover, method, a.max_dim);
  ensure_dir(a.out_dir);
  if (a.format != "dot")
    write_file(a.out_dir + "/mapper_output.json", json_dumps(mapper_output_to_json(out)));
  if (a.format != "json")
    write_file(a.out_dir + "/mapper_output.dot", mapper_output_to_dot(out));
  std::string outcome = std::to_string(out.provenance.size()) + " vertices, " +
                        std::to_string(out.complex.face_count()) + " faces";
  manifest.write(a.out_dir, outcome);
  std::cout << "mapper: " << outcome << "\n";
  return 0;
}

struct InverseArgs {
  std::string complex_path, points_path;
  std::string out_dir = ".";
  int dim = 0; // 0 = derive from the complex
  std::uint64_t seed = 0;
  int max_trials = 10000;
  std::string inflate = "0";
  std::string shrink_factor = "1/2";
  int shrink_every = 16;
  int threads = 0;
};

void write_replay_artifacts(const std::string& out_dir, const PointCloud& x, const Lens& lens,
                            const IndexedCover& cover, const MapperOutput& out,
                            const IsoCertificate& cert) {
  write_file(out_dir + "/lens.json", json_dumps(lens_to_json(lens)));
  write_file(out_dir + "/cover.json", json_dumps(cover_to_json(cover)));
  write_file(out_dir + "/points.csv", point_cloud_to_csv(x));
  write_file(out_dir + "/mapper_output.json", json_dumps(mapper_output_to_json(out)));
  write_file(out_dir + "/mapper_output.dot", mapper_output_to_dot(out));
  write_file(out_dir + "/certificate.json", json_dumps(iso_to_json(cert)));
}

int cmd_inverse_star(const InverseArgs& a, ManifestBuilder& manifest) {
  SimplicialComplex k = complex_from_json(Json::parse(manifest.load(a.complex_path)));
  PointCloud x = point_cloud_from_csv_string(manifest.load(a.points_path));
  StarParams params = synthesize_star_params(k, x);
  int max_dim = std::max(k.dimension(), 0);
  MapperOutput out = mapper_trivial(x, params.lens, params.cover, max_dim);
  auto cert = isomorphic(out.complex, k);
  if (!cert) fail(Errc::RoundTripFailed, "star round trip failed");
  ensure_dir(a.out_dir);
  write_file(a.out_dir + "/params.json", json_dumps(star_params_to_json(params)));
  write_replay_artifacts(a.out_dir, x, params.lens, params.cover, out, *cert);
  manifest.extras["max_dim"] = max_dim;
  manifest.write(a.out_dir, "isomorphic");
  std::cout << "inverse star: verified isomorphism on " << k.vertex_set().size()
            << " vertices\n";
  return 0;
}

int cmd_inverse_geometric_star(const InverseArgs& a, ManifestBuilder& manifest) {
  SimplicialComplex k = complex_from_json(Json::parse(manifest.load(a.complex_path)));
  PointCloud x = point_cloud_from_csv_string(manifest.load(a.points_path));
  int d = a.dim > 0 ? a.dim : std::max(k.dimension(), 1);
  GeometricStarCover cover = geometric_star_cover(k, x, d);
  int max_dim = std::max(k.dimension(), 0);
  MapperOutput out = mapper_trivial(x, cover.lens, cover.cover, max_dim);
  auto cert = isomorphic(out.complex, k);
  if (!cert) fail(Errc::RoundTripFailed, "geometric star round trip failed");
  ensure_dir(a.out_dir);
  Json params{{"reference", complex_to_json(k)},
              {"ambient_dim", cover.embedding.config.ambient_dim},
              {"cover", cover_to_json(cover.cover)},
              {"lens", lens_to_json(cover.lens)}};
  write_file(a.out_dir + "/params.json", json_dumps(params));
  write_replay_artifacts(a.out_dir, x, cover.lens, cover.cover, out, *cert);
  manifest.extras["dim"] = d;
  manifest.write(a.out_dir, "isomorphic");
  std::cout << "inverse geometric-star: verified isomorphism in R^"
            << cover.embedding.config.ambient_dim << "\n";
  return 0;
}

int cmd_inverse_convex(const InverseArgs& a, ManifestBuilder& manifest) {
  SimplicialComplex k = complex_from_json(Json::parse(manifest.load(a.complex_path)));
  PointCloud x = point_cloud_from_csv_string(manifest.load(a.points_path));
  int d = a.dim > 0 ? a.dim : std::max(k.dimension(), 1);
  SearchOptions opts;
  opts.seed = a.seed;
  opts.max_trials = a.max_trials;
  opts.inflate = rat_from_string(a.inflate);
  opts.shrink_factor = rat_from_string(a.shrink_factor);
  opts.shrink_every = a.shrink_every;
  opts.threads = a.threads;
  ConvexSynthesisResult result = synthesize_convex_cover(k, x, d, opts);
  if (auto* exhausted = std::get_if<SearchExhausted>(&result)) {
    std::cout << "inverse convex: search exhausted after " << exhausted->trials << " trials"
              << " (seed " << a.seed << ")\n";
    return 4;
  }
  ConvexCover& cover = std::get<ConvexCover>(result);
  int max_dim = std::max(k.dimension(), 1);
  IndexedCover mapper_cover = family_cover(cover.family);
  MapperOutput out = mapper_trivial(x, cover.lens, mapper_cover, max_dim);
  auto cert = isomorphic(out.complex, k);
  if (!cert) fail(Errc::RoundTripFailed, "certified family did not reproduce the complex");
  ensure_dir(a.out_dir);
  write_file(a.out_dir + "/family.json", json_dumps(family_to_json(cover.family)));
  Json params{{"reference", complex_to_json(k)},
              {"ambient_dim", cover.family.ambient_dim},
              {"cover", cover_to_json(mapper_cover)},
              {"lens", lens_to_json(cover.lens)},
              {"trial", cover.trial}};
  write_file(a.out_dir + "/params.json", json_dumps(params));
  write_replay_artifacts(a.out_dir, x, cover.lens, mapper_cover, out, *cert);
  Json certificate{{"pattern", pattern_to_json(cover.certificate)},
                   {"isomorphism", iso_to_json(*cert)}};
  write_file(a.out_dir + "/certificate.json", json_dumps(certificate));
  manifest.extras["seed"] = a.seed;
  manifest.extras["trial"] = cover.trial;
  manifest.extras["dim"] = d;
  manifest.write(a.out_dir, "certified");
  std::cout << "inverse convex: certified at trial " << cover.trial << ", isomorphism verified\n";
  return 0;
}

struct CertifyArgs {
  std::string family_path, complex_path;
  int max_dim = 1;
};

int cmd_certify(const CertifyArgs& a, ManifestBuilder& manifest) {
  ConvexFamily family = family_from_json(Json::parse(manifest.load(a.family_path)));
  SimplicialComplex k = complex_from_json(Json::parse(manifest.load(a.complex_path)));
  CertifyResult result = certify_family(family, k, a.max_dim);
  if (auto* mismatch = std::get_if<PatternMismatch>(&result)) {
    Json diff{{"certified", false},
              {"tuple", mismatch->tuple},
              {"expected_nonempty", mismatch->expected_nonempty}};
    std::cout << json_dumps(diff);
    return 1;
  }
  Json ok{{"certified", true}, {"pattern", pattern_to_json(std::get<CertifiedPattern>(result))}};
  std::cout << json_dumps(ok);
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, ManifestBuilder& manifest) {
  SimplicialComplex a = complex_from_json(Json::parse(manifest.load(a_path)));
  SimplicialComplex b = complex_from_json(Json::parse(manifest.load(b_path)));
  auto cert = isomorphic(a, b);
  if (!cert) {
    std::cout << json_dumps(Json{{"isomorphic", false}});
    return 1;
  }
  std::cout << json_dumps(iso_to_json(*cert));
  return 0;
}

struct ExtendArgs {
  std::string data_path, query_path, omega_path, radii_path, new_points_path;
  std::string points_path, lens_path; // alternative to --data
  std::string out_dir = ".";
  int max_dim = 1;
};

LipschitzData load_lipschitz(const ExtendArgs& a, ManifestBuilder& manifest) {
  if (!a.data_path.empty()) return lipschitz_from_json(Json::parse(manifest.load(a.data_path)));
  if (a.points_path.empty() || a.lens_path.empty())
    fail(Errc::BadInput, "need either --data or both --points and --lens");
  PointCloud x = point_cloud_from_csv_string(manifest.load(a.points_path));
  Lens lens = lens_from_json(Json::parse(manifest.load(a.lens_path)));
  if (lens.kind != Lens::Kind::TableToPoint)
    fail(Errc::BadInput, "extension tools need a point-valued lens");
  return LipschitzData::build(std::move(x), lens.point_table);
}

int cmd_extend_eval(const ExtendArgs& a, ManifestBuilder& manifest) {
  LipschitzData data = load_lipschitz(a, manifest);
  PointCloud queries = point_cloud_from_csv_string(manifest.load(a.query_path));
  Json results = Json::array();
  for (const PointCloud::Point& q : queries.points) {
    std::vector<SurdCoord> image = mcshane_extend(data, q.coords);
    Json exact = Json::array();
    Json fp = Json::array();
    for (const SurdCoord& c : image) {
      exact.push_back(Json{{"base", rat_to_string(c.base)}, {"rad2", rat_to_string(c.rad2)}});
      fp.push_back(c.approx());
    }
    results.push_back(Json{{"id", q.id}, {"value", exact}, {"value_fp", fp}});
  }
  std::cout << json_dumps(Json{{"results", results}});
  return 0;
}

int cmd_extend_radii(const ExtendArgs& a, ManifestBuilder& manifest) {
  LipschitzData data = load_lipschitz(a, manifest);
  ConvexFamily omega = family_from_json(Json::parse(manifest.load(a.omega_path)));
  SafetyRadii radii = safety_radii(data, omega);
  ensure_dir(a.out_dir);
  write_file(a.out_dir + "/radii.json", json_dumps(radii_to_json(radii)));
  manifest.write(a.out_dir, std::to_string(radii.entries.size()) + " radii");
  std::cout << "extend radii: " << radii.entries.size() << " entries written\n";
  return 0;
}

int cmd_extend_verify(const ExtendArgs& a, ManifestBuilder& manifest) {
  LipschitzData data = load_lipschitz(a, manifest);
  ConvexFamily omega = family_from_json(Json::parse(manifest.load(a.omega_path)));
  SafetyRadii radii = radii_from_json(Json::parse(manifest.load(a.radii_path)));
  PointCloud extra = point_cloud_from_csv_string(manifest.load(a.new_points_path));
  ConvexMapperParams params;
  params.x = data.domain;
  params.lens.kind = Lens::Kind::TableToPoint;
  params.lens.point_table = data.values;
  params.family = omega;
  params.max_dim = a.max_dim;
  try {
    StabilityReport report = verify_stability(params, radii, extra);
    Json j{{"stable", report.stable},
           {"pattern_added", report.pattern_added},
           {"pattern_removed", report.pattern_removed}};
    std::cout << json_dumps(j);
    return report.stable ? 0 : 1;
  } catch (const PointOutsideUError& e) {
    Json j{{"stable", false}, {"outside_points", e.point_ids}};
    std::cout << json_dumps(j);
    return 1;
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Mapper pipelines and certified inverse constructions"};
  app.require_subcommand(1);

  MapperArgs ma;
  CLI::App* mapper = app.add_subcommand("mapper", "Run the Mapper pipeline on a point cloud");
  mapper->add_option("--points", ma.points_path, "point cloud CSV")->required();
  mapper->add_option("--lens", ma.lens_path, "lens JSON")->required();
  mapper->add_option("--cover", ma.cover_path, "cover JSON")->required();
  mapper->add_option("--clustering", ma.clustering, "trivial | single-linkage")
      ->check(CLI::IsMember({"trivial", "single-linkage"}));
  mapper->add_option("--epsilon", ma.epsilon, "single-linkage radius (rational)");
  mapper->add_option("--max-dim", ma.max_dim, "maximum nerve dimension");
  mapper->add_option("--out-dir", ma.out_dir, "output directory");
  mapper->add_option("--format", ma.format, "json | dot | both")
      ->check(CLI::IsMember({"json", "dot", "both"}));

  InverseArgs ia;
  CLI::App* inverse = app.add_subcommand("inverse", "Synthesize Mapper parameters for a target");
  inverse->require_subcommand(1);
  CLI::App* inv_star = inverse->add_subcommand("star", "star cover of the target complex");
  CLI::App* inv_geo =
      inverse->add_subcommand("geometric-star", "open stars of a moment-curve realization");
  CLI::App* inv_convex = inverse->add_subcommand("convex", "certified convex cover search");
  for (CLI::App* sub : {inv_star, inv_geo, inv_convex}) {
    sub->add_option("--complex", ia.complex_path, "target complex JSON")->required();
    sub->add_option("--points", ia.points_path, "point cloud CSV")->required();
    sub->add_option("--out-dir", ia.out_dir, "output directory");
  }
  for (CLI::App* sub : {inv_geo, inv_convex})
    sub->add_option("--dim", ia.dim, "target dimension d (ambient 2d+1)");
  inv_convex->add_option("--seed", ia.seed, "search seed");
  inv_convex->add_option("--max-trials", ia.max_trials, "trial budget");
  inv_convex->add_option("--inflate", ia.inflate, "initial fattening radius (rational)");
  inv_convex->add_option("--shrink-factor", ia.shrink_factor, "fattening shrink per step");
  inv_convex->add_option("--shrink-every", ia.shrink_every, "trials between shrinks");
  inv_convex->add_option("--threads", ia.threads, "parallel trials (0 = auto)");

  CertifyArgs ca;
  CLI::App* certify = app.add_subcommand("certify", "Check a family against a complex");
  certify->add_option("--family", ca.family_path, "convex family JSON")->required();
  certify->add_option("--complex", ca.complex_path, "target complex JSON")->required();
  certify->add_option("--max-dim", ca.max_dim, "pattern dimension to certify");

  std::string iso_a, iso_b;
  CLI::App* iso = app.add_subcommand("iso", "Isomorphism certificate between two complexes");
  iso->add_option("--a", iso_a, "first complex JSON")->required();
  iso->add_option("--b", iso_b, "second complex JSON")->required();

  ExtendArgs ea;
  CLI::App* extend = app.add_subcommand("extend", "Lipschitz extension tools");
  extend->require_subcommand(1);
  CLI::App* ext_eval = extend->add_subcommand("eval", "evaluate the extension at query points");
  ext_eval->add_option("--query", ea.query_path, "query points CSV")->required();
  CLI::App* ext_radii = extend->add_subcommand("radii", "compute safety radii");
  ext_radii->add_option("--omega", ea.omega_path, "convex family JSON")->required();
  ext_radii->add_option("--out-dir", ea.out_dir, "output directory");
  CLI::App* ext_verify = extend->add_subcommand("verify", "check stability under new points");
  ext_verify->add_option("--omega", ea.omega_path, "convex family JSON")->required();
  ext_verify->add_option("--radii", ea.radii_path, "safety radii JSON")->required();
  ext_verify->add_option("--new-points", ea.new_points_path, "new points CSV")->required();
  ext_verify->add_option("--max-dim", ea.max_dim, "nerve dimension for the comparison");
  for (CLI::App* sub : {ext_eval, ext_radii, ext_verify}) {
    sub->add_option("--data", ea.data_path, "lipschitz data JSON");
    sub->add_option("--points", ea.points_path, "domain points CSV (with --lens)");
    sub->add_option("--lens", ea.lens_path, "point-valued lens JSON (with --points)");
  }

  std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 wants a reversed vector
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  ManifestBuilder manifest;
  manifest.command = join_args(args);
  try {
    if (mapper->parsed()) return cmd_mapper(ma, manifest);
    if (inv_star->parsed()) return cmd_inverse_star(ia, manifest);
    if (inv_geo->parsed()) return cmd_inverse_geometric_star(ia, manifest);
    if (inv_convex->parsed()) return cmd_inverse_convex(ia, manifest);
    if (certify->parsed()) return cmd_certify(ca, manifest);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, manifest);
    if (ext_eval->parsed()) return cmd_extend_eval(ea, manifest);
    if (ext_radii->parsed()) return cmd_extend_radii(ea, manifest);
    if (ext_verify->parsed()) return cmd_extend_verify(ea, manifest);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}

} // namespace mapperforge
