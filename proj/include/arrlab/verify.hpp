#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrlab/arrangement.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/rational.hpp"

namespace arrlab {

struct VerifyOptions {
  long long samples = 1000000;  // per region
  uint64_t seed = 1;
  double tol = 1e-9;
  double zmax = 4.0;
  int threads = 0;  // 0: auto (capped by ARRLAB_THREADS)
  bool with_flats = true;
  bool force_mc = false;  // sample even when the exact low-rank path applies
};

struct TheoremRow {
  int k = 0;              // projection dimension in the original space
  Rational expected;      // |coefficient of t^(r-d+k)|, exact
  double estimated = 0;   // sum over regions of the estimated nu_k
  double se = 0;          // pooled standard error (0 on the exact path)
  double z = 0;
  bool pass = false;
  std::string path;       // "exact" or "mc"
};

struct FlatRow {
  int flat_id = 0;
  int rho = 0;           // codimension of the flat
  int flat_dim = 0;
  Rational expected;     // |mobius(bottom, flat)|
  double estimated = 0;  // accumulated nu over faces spanning the flat
  double se = 0;
  double z = 0;
  bool pass = false;
  std::string path;
};

struct VerificationReport {
  std::string arrangement_id;
  int d = 0;
  int r = 0;
  bool essentialized = false;
  int index_shift = 0;
  long long regions = 0;
  CharPoly chi;  // poset-rank form, degree r
  long long samples_per_region = 0;
  uint64_t seed = 0;
  double tol = 0;
  double zmax = 0;
  std::string method;  // "exact-rank2" or "monte-carlo"
  std::vector<TheoremRow> theorem1;
  std::vector<FlatRow> flats;
  bool pass = false;
  std::vector<int> failed_k;
  std::vector<int> failed_flats;
  double elapsed_seconds = 0;  // reporting only; never serialized to JSON
};

/// Re-derives every pass flag, z-score and the aggregate verdict from the
/// stored rows. Used after any change to the expected values.
void evaluate_report(VerificationReport& report, double tol, double zmax);

/// Checks the region-sum identity: for every projection dimension k, the
/// regions' summed projection volumes against the matching characteristic
/// polynomial coefficient. Exact planar angles when the essentialized rank
/// is at most 2, Monte Carlo otherwise. Runs the exact lattice/angle-sum
/// cross-checks first and throws on any exact failure.
VerificationReport verify_main_theorem(const Arrangement& arr, const VerifyOptions& opts,
                                       const std::string& id = "");

/// Per-flat identity: accumulated projection volume onto faces spanning
/// each flat equals |mobius(flat)|. Requires an essential arrangement.
std::vector<FlatRow> verify_flat_identity(const Arrangement& arr, const VerifyOptions& opts);

json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report, bool timings = false);

/// Serializes the report in "json" or "text" form; writes to `path` when
/// nonempty, and returns the rendered document either way.
std::string emit_report(const VerificationReport& report, const std::string& format,
                        const std::string& path = "");

}  // namespace arrlab
