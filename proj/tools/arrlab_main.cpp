#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/cone.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/generators.hpp"
#include "arrlab/io.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/montecarlo.hpp"
#include "arrlab/verify.hpp"
#include "arrlab/zonotope.hpp"

namespace {

using arrlab::json;

arrlab::Arrangement load_source(const std::string& source) {
  if (source.rfind("gen:", 0) == 0)
    return arrlab::generate(arrlab::parse_generator_spec(source.substr(4)));
  return arrlab::load_arrangement(source);
}

std::vector<double> parse_point(const std::string& text, int dim) {
  std::vector<double> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find('/') != std::string::npos) {
      point.push_back(arrlab::to_double(arrlab::parse_rational(item)));
    } else {
      size_t pos = 0;
      point.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw arrlab::IoError("bad coordinate: " + item);
    }
  }
  if (static_cast<int>(point.size()) != dim)
    throw arrlab::DimensionMismatch("point has " + std::to_string(point.size()) +
                                    " coordinates, cone lives in dimension " + std::to_string(dim));
  return point;
}

json analyze_json(const arrlab::Arrangement& arr, bool zonotope) {
  const arrlab::IntersectionLattice lat = arrlab::build_lattice(arr);
  const auto regions = arrlab::enumerate_regions(arr);
  json j;
  j["dim"] = arr.dim;
  j["rank"] = arr.rank;
  j["hyperplanes"] = arrlab::arrangement_to_json(arr)["hyperplanes"];
  j["charpoly"] = arrlab::characteristic_polynomial(lat).coeff_strings_desc();
  j["region_count"] = regions.size();
  j["region_signs"] = json::array();
  for (const auto& region : regions) j["region_signs"].push_back(region.signs);
  j["flats"] = json::array();
  for (const auto& flat : lat.flats) {
    json covers = json::array();
    for (size_t y = 0; y < lat.size(); ++y)
      if (lat.covers(flat.id, static_cast<int>(y))) covers.push_back(y);
    j["flats"].push_back({{"id", flat.id},
                          {"dim", flat.dim},
                          {"rho", lat.rho[flat.id]},
                          {"mobius", lat.mobius_bottom(flat.id)},
                          {"hyperplanes", flat.hyperplane_set},
                          {"covers", covers}});
  }
  if (zonotope) {
    const arrlab::Essentialization ess = arrlab::essentialize(arr);
    const arrlab::IntersectionLattice elat =
        ess.index_shift == 0 ? lat : arrlab::build_lattice(ess.essential);
    const auto f = arrlab::f_vector_zaslavsky(elat);
    const auto alpha = arrlab::angle_sums_perles_shephard(elat);
    const auto alpha_dual = arrlab::angle_sums_dual(elat);
    const auto lemma = arrlab::vertex_lemma_check(elat);
    json z;
    z["essentialized"] = ess.index_shift > 0;
    z["f"] = f;
    z["alpha"] = json::array();
    for (const auto& a : alpha) z["alpha"].push_back(arrlab::rational_str(a));
    z["alpha_dual"] = json::array();
    for (const auto& a : alpha_dual) z["alpha_dual"].push_back(arrlab::rational_str(a));
    z["lemma5"] = {arrlab::rational_str(lemma.first), arrlab::rational_str(lemma.second)};
    j["zonotope"] = std::move(z);
  }
  return j;
}

std::string zonotope_table(const json& z) {
  std::ostringstream os;
  const auto& f = z["f"];
  const auto& alpha = z["alpha"];
  const auto& dual = z["alpha_dual"];
  os << "k      f_k    alpha_k  alpha_k(dual)\n";
  for (size_t k = 0; k < f.size(); ++k) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-4zu %6lld %10s %14s\n", k, f[k].get<long long>(),
                  alpha[k].get<std::string>().c_str(), dual[k].get<std::string>().c_str());
    os << line;
  }
  os << "lemma5: alpha_0 = " << z["lemma5"][0].get<std::string>()
     << ", |mu(bottom,top)| = " << z["lemma5"][1].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrlab: exact combinatorics and projection volumes of central hyperplane arrangements"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named arrangement family");
  std::string gen_family;
  std::vector<long long> gen_params;
  uint64_t gen_seed = 0;
  long long gen_range = 5;
  std::string gen_out;
  gen->add_option("family", gen_family, "boolean | braid | threelines | random")->required();
  gen->add_option("params", gen_params, "family parameters (boolean D; braid N; random M D)");
  gen->add_option("--seed", gen_seed, "seed for the random family");
  gen->add_option("--range", gen_range, "coordinate range for the random family");
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "lattice, Mobius values and characteristic polynomial");
  std::string analyze_source, analyze_out;
  bool analyze_zonotope = false;
  analyze->add_option("source", analyze_source, "arrangement file or gen:SPEC")->required();
  analyze->add_flag("--zonotope", analyze_zonotope, "also report f-vector and angle sums");
  analyze->add_option("--out", analyze_out, "write JSON here instead of stdout");

  // project
  auto* project = app.add_subcommand("project", "project a point onto a cone");
  std::string project_cone, project_point_text;
  double project_tol = 1e-9;
  project->add_option("--cone", project_cone, "cone file")->required();
  project->add_option("--point", project_point_text, "comma-separated coordinates")->required();
  project->add_option("--tol", project_tol, "classification tolerance");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo projection-volume profile of a cone");
  std::string estimate_cone;
  long long estimate_samples = 1000000;
  uint64_t estimate_seed = 1;
  double estimate_tol = 1e-9;
  estimate->add_option("--cone", estimate_cone, "cone file")->required();
  estimate->add_option("--samples", estimate_samples, "number of sampled directions");
  estimate->add_option("--seed", estimate_seed, "RNG seed");
  estimate->add_option("--tol", estimate_tol, "classification tolerance");

  // verify
  auto* verify = app.add_subcommand("verify", "verify region-sum identities for an arrangement");
  std::string verify_source, verify_out;
  arrlab::VerifyOptions opts;
  bool no_flats = false, timings = false;
  verify->add_option("source", verify_source, "arrangement file or gen:SPEC")->required();
  verify->add_option("--samples", opts.samples, "Monte Carlo samples per region");
  verify->add_option("--seed", opts.seed, "RNG seed");
  verify->add_option("--tol", opts.tol, "numeric tolerance");
  verify->add_option("--zmax", opts.zmax, "statistical acceptance threshold");
  verify->add_option("--out", verify_out, "write the JSON report here");
  verify->add_flag("--no-flats", no_flats, "skip the per-flat identity table");
  verify->add_flag("--timings", timings, "print wall-clock timing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::ostringstream spec;
      spec << gen_family;
      for (long long p : gen_params) spec << ":" << p;
      if (gen_family == "random") {
        if (gen_params.size() != 2) throw arrlab::BadSpec("usage: gen random M D --seed S [--range R]");
        spec << ":" << gen_seed << ":" << gen_range;
      }
      const arrlab::Arrangement arr = arrlab::generate(arrlab::parse_generator_spec(spec.str()));
      if (gen_out.empty())
        std::cout << arrlab::arrangement_to_json(arr).dump(2) << "\n";
      else
        arrlab::save_arrangement(arr, gen_out);
      return 0;
    }
    if (*analyze) {
      const arrlab::Arrangement arr = load_source(analyze_source);
      const json j = analyze_json(arr, analyze_zonotope);
      if (analyze_out.empty()) {
        std::cout << j.dump(2) << "\n";
        if (analyze_zonotope) std::cerr << zonotope_table(j["zonotope"]);
      } else {
        arrlab::write_file(analyze_out, j.dump(2) + "\n");
        if (analyze_zonotope) std::cout << zonotope_table(j["zonotope"]);
      }
      return 0;
    }
    if (*project) {
      const arrlab::Cone cone = arrlab::load_cone(project_cone);
      const auto z = parse_point(project_point_text, cone.dim);
      const arrlab::ProjectionResult res = arrlab::project_point(cone, z, project_tol);
      json j;
      j["point"] = z;
      j["projection"] = res.point;
      j["residual"] = res.residual;
      j["tight"] = res.tight;
      j["k"] = res.face_dim;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*estimate) {
      const arrlab::Cone cone = arrlab::load_cone(estimate_cone);
      const arrlab::VolumeEstimate est =
          arrlab::estimate_volumes_mc(cone, estimate_samples, estimate_seed, estimate_tol);
      json j;
      j["nu"] = est.nu;
      j["stderr"] = est.se;
      j["counts"] = est.counts;
      j["samples"] = est.samples;
      j["seed"] = est.seed;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      opts.with_flats = !no_flats;
      const arrlab::Arrangement arr = load_source(verify_source);
      const arrlab::VerificationReport report =
          arrlab::verify_main_theorem(arr, opts, verify_source);
      std::cout << arrlab::report_to_text(report, timings);
      if (!verify_out.empty()) arrlab::emit_report(report, "json", verify_out);
      return report.pass ? 0 : 1;
    }
  } catch (const arrlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
