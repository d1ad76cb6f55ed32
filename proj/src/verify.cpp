#include "arrlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "arrlab/cone.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/io.hpp"
#include "arrlab/linalg.hpp"
#include "arrlab/montecarlo.hpp"
#include "arrlab/rng.hpp"
#include "arrlab/zonotope.hpp"

namespace arrlab {

namespace {

void pass_mark(TheoremRow& row, double tol, double zmax) {
  const double expected = to_double(row.expected);
  const double diff = row.estimated - expected;
  if (row.path == "exact") {
    row.z = 0;
    row.pass = std::abs(diff) <= tol * (1.0 + std::abs(expected));
  } else if (row.se > 0) {
    row.z = diff / row.se;
    row.pass = std::abs(row.z) <= zmax;
  } else {
    row.z = (diff == 0) ? 0 : std::numeric_limits<double>::infinity();
    row.pass = diff == 0;
  }
}

void pass_mark(FlatRow& row, double tol, double zmax) {
  const double expected = to_double(row.expected);
  const double diff = row.estimated - expected;
  if (row.path == "exact") {
    row.z = 0;
    row.pass = std::abs(diff) <= tol * (1.0 + std::abs(expected));
  } else if (row.se > 0) {
    row.z = diff / row.se;
    row.pass = std::abs(row.z) <= zmax;
  } else {
    row.z = (diff == 0) ? 0 : std::numeric_limits<double>::infinity();
    row.pass = diff == 0;
  }
}

// Exact per-flat accumulation for planar (rank <= 2) essential arrangements:
// the interior of every region contributes its own angle to the bottom flat,
// each ray face contributes a quarter turn per adjacent region to its line,
// and the vertex collects the leftovers.
std::vector<FlatRow> exact_flat_rows(const Arrangement& ess, const IntersectionLattice& lat,
                                     const std::vector<SignVector>& regions,
                                     const std::vector<std::vector<double>>& region_nu) {
  std::vector<FlatRow> rows(lat.size());
  std::vector<double> est(lat.size(), 0.0);
  const int r = ess.rank;

  for (const auto& nu : region_nu) est[lat.bottom] += nu[r];
  if (r >= 1)
    for (const auto& nu : region_nu) est[lat.top] += nu[0];
  if (r == 2) {
    const auto span_to_flat = lat.span_index();
    for (const auto& face : enumerate_faces(ess)) {
      if (face.dim != 1) continue;
      RatMat span;
      for (int i : face.zero_set) span.push_back(ess.normal(i));
      rref_inplace(span);
      const int flat = span_to_flat.at(rref_key(span));
      int adjacent = 0;
      for (const auto& region : regions) {
        bool ok = true;
        for (size_t i = 0; i < face.cell.signs.size(); ++i)
          if (face.cell.signs[i] != '0' && face.cell.signs[i] != region.signs[i]) ok = false;
        if (ok) ++adjacent;
      }
      est[flat] += 0.25 * adjacent;
    }
  }

  for (size_t f = 0; f < lat.size(); ++f) {
    rows[f].flat_id = static_cast<int>(f);
    rows[f].rho = lat.rho[f];
    rows[f].flat_dim = lat.flats[f].dim;
    const long long mu = lat.mobius_bottom(static_cast<int>(f));
    rows[f].expected = Rational(mu >= 0 ? mu : -mu);
    rows[f].estimated = est[f];
    rows[f].se = 0;
    rows[f].path = "exact";
  }
  return rows;
}

}  // namespace

void evaluate_report(VerificationReport& report, double tol, double zmax) {
  report.tol = tol;
  report.zmax = zmax;
  report.failed_k.clear();
  report.failed_flats.clear();
  for (auto& row : report.theorem1) {
    pass_mark(row, tol, zmax);
    if (!row.pass) report.failed_k.push_back(row.k);
  }
  for (auto& row : report.flats) {
    pass_mark(row, tol, zmax);
    if (!row.pass) report.failed_flats.push_back(row.flat_id);
  }
  report.pass = report.failed_k.empty() && report.failed_flats.empty();
}

VerificationReport verify_main_theorem(const Arrangement& arr, const VerifyOptions& opts,
                                       const std::string& id) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.arrangement_id = id;
  report.d = arr.dim;
  report.r = arr.rank;
  report.samples_per_region = opts.samples;
  report.seed = opts.seed;

  const Essentialization ess = essentialize(arr);
  report.essentialized = ess.index_shift > 0;
  report.index_shift = ess.index_shift;
  const Arrangement& e = ess.essential;
  const int r = e.rank;

  const IntersectionLattice lat = build_lattice(e);
  report.chi = characteristic_polynomial(lat);
  if (!report.chi.alternating_with_unit_lead())
    throw Error("characteristic polynomial does not alternate; lattice is inconsistent");

  const std::vector<SignVector> regions = enumerate_regions(e);
  report.regions = static_cast<long long>(regions.size());

  // Exact cross-checks must hold before any sampling is trusted.
  if (region_count_check(lat) != report.regions)
    throw Error("region enumeration disagrees with the characteristic polynomial at -1");
  if (r >= 1) {
    const RatVec ps = angle_sums_perles_shephard(lat);
    const RatVec dual = angle_sums_dual(lat);
    if (ps != dual) throw Error("angle-sum computations disagree; lattice is inconsistent");
    const auto lemma = vertex_lemma_check(lat);
    if (lemma.first != lemma.second)
      throw Error("vertex angle sum does not match |mobius(bottom, top)|");
  }

  const bool exact_path = (r <= 2) && !opts.force_mc;
  report.method = exact_path ? "exact-rank2" : "monte-carlo";

  std::vector<double> sums(arr.dim + 1, 0.0);
  std::vector<double> variances(arr.dim + 1, 0.0);
  std::vector<std::vector<double>> region_nu;  // essential-index profiles, exact path only

  std::vector<double> flat_est(lat.size(), 0.0);
  std::vector<double> flat_var(lat.size(), 0.0);

  RatMat essential_normals;
  for (const auto& h : e.hyperplanes) essential_normals.push_back(h.normal);
  const auto span_to_flat = lat.span_index();
  const FlatAttribution flats(essential_normals, span_to_flat, static_cast<int>(lat.size()));

  for (size_t ridx = 0; ridx < regions.size(); ++ridx) {
    const Cone cone = region_cone(ess, regions[ridx]);
    if (exact_path) {
      std::vector<double> nu = exact_volumes_rank2(cone);
      for (int k = 0; k <= r; ++k) sums[k + ess.index_shift] += nu[k];
      region_nu.push_back(std::move(nu));
    } else {
      const ConeSampleStats stats =
          sample_cone(cone, opts.samples, opts.seed, /*stream=*/ridx + 1, opts.tol, opts.threads,
                      opts.with_flats ? &flats : nullptr);
      const double n = static_cast<double>(stats.samples);
      for (int k = 0; k <= r; ++k) {
        const double p = static_cast<double>(stats.k_counts[k]) / n;
        sums[k + ess.index_shift] += p;
        variances[k + ess.index_shift] += p * (1.0 - p) / n;
      }
      if (opts.with_flats) {
        for (size_t f = 0; f < lat.size(); ++f) {
          const double p = static_cast<double>(stats.flat_counts[f]) / n;
          flat_est[f] += p;
          flat_var[f] += p * (1.0 - p) / n;
        }
      }
    }
  }

  for (int k = arr.dim; k >= 0; --k) {
    TheoremRow row;
    row.k = k;
    row.expected = report.chi.abs_coeff(k - ess.index_shift);
    row.estimated = sums[k];
    row.se = std::sqrt(variances[k]);
    row.path = exact_path ? "exact" : "mc";
    report.theorem1.push_back(std::move(row));
  }

  if (opts.with_flats) {
    if (exact_path) {
      report.flats = exact_flat_rows(e, lat, regions, region_nu);
    } else {
      for (size_t f = 0; f < lat.size(); ++f) {
        FlatRow row;
        row.flat_id = static_cast<int>(f);
        row.rho = lat.rho[f];
        row.flat_dim = lat.flats[f].dim;
        const long long mu = lat.mobius_bottom(static_cast<int>(f));
        row.expected = Rational(mu >= 0 ? mu : -mu);
        row.estimated = flat_est[f];
        row.se = std::sqrt(flat_var[f]);
        row.path = "mc";
        report.flats.push_back(std::move(row));
      }
    }
  }

  evaluate_report(report, opts.tol, opts.zmax);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<FlatRow> verify_flat_identity(const Arrangement& arr, const VerifyOptions& opts) {
  if (!arr.essential())
    throw NotEssential("per-flat verification requires an essential arrangement");
  VerifyOptions with_flats = opts;
  with_flats.with_flats = true;
  return verify_main_theorem(arr, with_flats).flats;
}

json report_to_json(const VerificationReport& report) {
  json j;
  j["arrangement"] = report.arrangement_id;
  j["dim"] = report.d;
  j["rank"] = report.r;
  j["essentialized"] = report.essentialized;
  j["index_shift"] = report.index_shift;
  j["regions"] = report.regions;
  j["charpoly"] = report.chi.coeff_strings_desc();
  j["samples_per_region"] = report.samples_per_region;
  j["seed"] = report.seed;
  j["tol"] = report.tol;
  j["zmax"] = report.zmax;
  j["method"] = report.method;
  j["theorem1"] = json::array();
  for (const auto& row : report.theorem1) {
    j["theorem1"].push_back({{"k", row.k},
                             {"expected", rational_str(row.expected)},
                             {"estimated", row.estimated},
                             {"stderr", row.se},
                             {"z", std::isfinite(row.z) ? row.z : 1e300},
                             {"pass", row.pass},
                             {"path", row.path}});
  }
  j["flats"] = json::array();
  for (const auto& row : report.flats) {
    j["flats"].push_back({{"flat", row.flat_id},
                          {"rho", row.rho},
                          {"dim", row.flat_dim},
                          {"expected", rational_str(row.expected)},
                          {"estimated", row.estimated},
                          {"stderr", row.se},
                          {"z", std::isfinite(row.z) ? row.z : 1e300},
                          {"pass", row.pass},
                          {"path", row.path}});
  }
  j["pass"] = report.pass;
  j["failed_k"] = report.failed_k;
  j["failed_flats"] = report.failed_flats;
  return j;
}

std::string report_to_text(const VerificationReport& report, bool timings) {
  std::ostringstream os;
  os << "arrangement " << report.arrangement_id << "  d=" << report.d << " r=" << report.r
     << "  regions=" << report.regions << "  method=" << report.method << "\n";
  os << "charpoly (degree " << report.chi.degree() << ", highest first):";
  for (const auto& c : report.chi.coeff_strings_desc()) os << " " << c;
  os << "\n";
  if (report.essentialized)
    os << "essentialized: rank " << report.r << " in dimension " << report.d << ", index shift "
       << report.index_shift << "\n";
  os << "\n";
  os << std::left << std::setw(4) << "k" << std::right << std::setw(12) << "expected"
     << std::setw(16) << "estimated" << std::setw(12) << "stderr" << std::setw(10) << "z"
     << std::setw(7) << "pass" << std::setw(7) << "path" << "\n";
  for (const auto& row : report.theorem1) {
    os << std::left << std::setw(4) << row.k << std::right << std::setw(12)
       << rational_str(row.expected) << std::setw(16) << std::setprecision(8) << std::fixed
       << row.estimated << std::setw(12) << std::setprecision(2) << std::scientific << row.se
       << std::setw(10) << std::setprecision(2) << std::fixed << row.z << std::setw(7)
       << (row.pass ? "ok" : "FAIL") << std::setw(7) << row.path << "\n";
    os.unsetf(std::ios::floatfield);
  }
  if (!report.flats.empty()) {
    os << "\nper-flat identity:\n";
    os << std::left << std::setw(6) << "flat" << std::setw(5) << "rho" << std::right
       << std::setw(12) << "|mu|" << std::setw(16) << "estimated" << std::setw(12) << "stderr"
       << std::setw(10) << "z" << std::setw(7) << "pass" << "\n";
    for (const auto& row : report.flats) {
      os << std::left << std::setw(6) << row.flat_id << std::setw(5) << row.rho << std::right
         << std::setw(12) << rational_str(row.expected) << std::setw(16) << std::setprecision(8)
         << std::fixed << row.estimated << std::setw(12) << std::setprecision(2)
         << std::scientific << row.se << std::setw(10) << std::setprecision(2) << std::fixed
         << row.z << std::setw(7) << (row.pass ? "ok" : "FAIL") << "\n";
      os.unsetf(std::ios::floatfield);
    }
  }
  os << "\noverall: " << (report.pass ? "PASS" : "FAIL") << "\n";
  if (timings)
    os << "elapsed: " << std::setprecision(3) << std::fixed << report.elapsed_seconds << " s\n";
  return os.str();
}

std::string emit_report(const VerificationReport& report, const std::string& format,
                        const std::string& path) {
  std::string rendered;
  if (format == "json") {
    rendered = report_to_json(report).dump(2) + "\n";
  } else if (format == "text") {
    rendered = report_to_text(report);
  } else {
    throw IoError("unknown report format: " + format);
  }
  if (!path.empty()) write_file(path, rendered);
  return rendered;
}

}  // namespace arrlab
