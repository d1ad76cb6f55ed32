#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrlab/cone.hpp"
#include "arrlab/zonotope.hpp"

namespace arrlab {

/// Worker count: `requested` when positive, otherwise the hardware count,
/// always capped by the ARRLAB_THREADS environment variable. The count never
/// affects sampled values, only wall-clock time.
int resolve_thread_count(int requested = 0);

struct VolumeEstimate {
  std::vector<double> nu;       // fraction per projection dimension 0..d
  std::vector<double> se;       // binomial standard error per entry
  std::vector<long long> counts;
  long long samples = 0;
  uint64_t seed = 0;
};

/// Maps a tight-set mask to the lattice flat spanned by those normals
/// (exact RREF lookup). Callers memoize per mask.
class FlatAttribution {
 public:
  FlatAttribution(const RatMat& exact_rows, const std::unordered_map<std::string, int>& span_to_flat,
                  int flat_count)
      : rows_(&exact_rows), span_to_flat_(&span_to_flat), flat_count_(flat_count) {}

  int flat_of_mask(uint64_t mask) const;
  int flat_count() const { return flat_count_; }

 private:
  const RatMat* rows_;
  const std::unordered_map<std::string, int>* span_to_flat_;
  int flat_count_;
};

struct ConeSampleStats {
  std::vector<long long> k_counts;     // index = projection dimension
  std::vector<long long> flat_counts;  // index = flat id (when attribution given)
  long long samples = 0;
};

/// Classifies n sphere-uniform directions (normalized Gaussian vectors)
/// against the cone. Deterministic for fixed (seed, stream, n) regardless of
/// the worker count: every sample is a pure function of its index.
ConeSampleStats sample_cone(const Cone& cone, long long n, uint64_t seed, uint64_t stream,
                            double tol, int threads, const FlatAttribution* flats = nullptr);

VolumeEstimate estimate_volumes_mc(const Cone& cone, long long n, uint64_t seed,
                                   double tol = 1e-9, int threads = 0);

struct SolidAngleEstimate {
  double value = 0;
  double se = 0;
  long long hits = 0;
  long long samples = 0;
  uint64_t seed = 0;
};

/// Monte Carlo measure of the normal cone at the zonotope vertex of a
/// region: the fraction of directions lying in the cone spanned by the
/// negated signed generators. Directions are sampled in antithetic pairs, so
/// a region and its negation receive mirrored sample sets and identical
/// estimates.
SolidAngleEstimate normal_cone_solid_angle(const ZonotopeModel& zono,
                                           const std::string& region_signs, long long n,
                                           uint64_t seed, double tol = 1e-9, int threads = 0);

}  // namespace arrlab
