#include "arrlab/montecarlo.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "arrlab/linalg.hpp"
#include "arrlab/rng.hpp"

namespace arrlab {

int resolve_thread_count(int requested) {
  int cap = 0;
  if (const char* env = std::getenv("ARRLAB_THREADS")) {
    cap = std::atoi(env);
    if (cap < 1) cap = 1;
  }
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (cap > 0) n = std::min(n, cap);
  return n;
}

int FlatAttribution::flat_of_mask(uint64_t mask) const {
  RatMat span;
  for (size_t i = 0; i < rows_->size(); ++i)
    if (mask & (uint64_t{1} << i)) span.push_back((*rows_)[i]);
  rref_inplace(span);
  auto it = span_to_flat_->find(rref_key(span));
  return it == span_to_flat_->end() ? -1 : it->second;
}

namespace {

template <typename Body>
void run_partitioned(long long n, int threads, Body body) {
  if (threads <= 1 || n < 4096) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  const long long chunk = (n + threads - 1) / threads;
  int slot = 0;
  for (long long lo = 0; lo < n; lo += chunk, ++slot) {
    const long long hi = std::min(n, lo + chunk);
    pool.emplace_back([=] { body(lo, hi, slot); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ConeSampleStats sample_cone(const Cone& cone, long long n, uint64_t seed, uint64_t stream,
                            double tol, int threads, const FlatAttribution* flats) {
  const int d = cone.dim;
  const int nworkers = resolve_thread_count(threads);
  const ConeGeometry geom(cone, tol);
  const CounterRng rng(seed, stream);

  struct Partial {
    std::vector<long long> k_counts;
    std::vector<long long> flat_counts;
  };
  const int nslots = (nworkers <= 1 || n < 4096) ? 1 : nworkers;
  std::vector<Partial> partials(std::max(nslots, 1));
  for (auto& p : partials) {
    p.k_counts.assign(d + 1, 0);
    if (flats) p.flat_counts.assign(flats->flat_count(), 0);
  }

  run_partitioned(n, nworkers, [&](long long lo, long long hi, int slot) {
    Partial& part = partials[slot];
    NnlsWorkspace ws;
    std::vector<double> z(d);
    std::unordered_map<uint64_t, std::pair<int, int>> memo;
    for (long long i = lo; i < hi; ++i) {
      double norm2 = 0;
      for (int j = 0; j < d; ++j) {
        z[j] = rng.gaussian(static_cast<uint64_t>(i), static_cast<uint32_t>(j));
        norm2 += z[j] * z[j];
      }
      if (norm2 > 0) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (int j = 0; j < d; ++j) z[j] *= inv;
      } else if (d > 0) {
        z[0] = 1.0;
      }
      ProjectionResult res = geom.project(z.data(), ws);
      uint64_t mask = 0;
      for (int t : res.tight) mask |= (uint64_t{1} << t);
      auto it = memo.find(mask);
      if (it == memo.end()) {
        const int k = res.face_dim;
        const int flat = flats ? flats->flat_of_mask(mask) : -1;
        it = memo.emplace(mask, std::make_pair(k, flat)).first;
      }
      part.k_counts[it->second.first]++;
      if (flats && it->second.second >= 0) part.flat_counts[it->second.second]++;
    }
  });

  ConeSampleStats stats;
  stats.samples = n;
  stats.k_counts.assign(d + 1, 0);
  if (flats) stats.flat_counts.assign(flats->flat_count(), 0);
  for (const auto& p : partials) {
    for (int k = 0; k <= d; ++k) stats.k_counts[k] += p.k_counts[k];
    if (flats)
      for (size_t f = 0; f < p.flat_counts.size(); ++f) stats.flat_counts[f] += p.flat_counts[f];
  }
  return stats;
}

VolumeEstimate estimate_volumes_mc(const Cone& cone, long long n, uint64_t seed, double tol,
                                   int threads) {
  assert(n >= 1);
  const ConeSampleStats stats = sample_cone(cone, n, seed, /*stream=*/0, tol, threads, nullptr);
  VolumeEstimate est;
  est.samples = n;
  est.seed = seed;
  est.counts = stats.k_counts;
  est.nu.resize(cone.dim + 1);
  est.se.resize(cone.dim + 1);
  for (int k = 0; k <= cone.dim; ++k) {
    const double p = static_cast<double>(stats.k_counts[k]) / static_cast<double>(n);
    est.nu[k] = p;
    est.se[k] = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  }
  return est;
}

SolidAngleEstimate normal_cone_solid_angle(const ZonotopeModel& zono,
                                           const std::string& region_signs, long long n,
                                           uint64_t seed, double tol, int threads) {
  const int d = zono.dim;
  assert(region_signs.size() == zono.generators.size());
  std::vector<std::vector<double>> gens;
  gens.reserve(zono.generators.size());
  for (size_t i = 0; i < zono.generators.size(); ++i) {
    const double s = (region_signs[i] == '+') ? -1.0 : 1.0;
    std::vector<double> g(d);
    for (int j = 0; j < d; ++j) g[j] = s * to_double(zono.generators[i][j]);
    gens.push_back(std::move(g));
  }
  const GeneratedConeProjector projector(gens, d);
  const CounterRng rng(seed, /*stream=*/0);
  const int nworkers = resolve_thread_count(threads);

  const int nslots = (nworkers <= 1 || n < 4096) ? 1 : nworkers;
  std::vector<long long> partial_hits(std::max(nslots, 1), 0);
  run_partitioned(n, nworkers, [&](long long lo, long long hi, int slot) {
    NnlsWorkspace ws;
    std::vector<double> z(d), proj(d);
    for (long long i = lo; i < hi; ++i) {
      // Antithetic pairing: odd indices negate the direction of index i-1.
      const uint64_t base = static_cast<uint64_t>(i) >> 1;
      const double flip = (i & 1) ? -1.0 : 1.0;
      double norm2 = 0;
      for (int j = 0; j < d; ++j) {
        z[j] = flip * rng.gaussian(base, static_cast<uint32_t>(j));
        norm2 += z[j] * z[j];
      }
      if (norm2 > 0) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (int j = 0; j < d; ++j) z[j] *= inv;
      } else if (d > 0) {
        z[0] = flip;
      }
      projector.project(z.data(), proj.data(), ws);
      double dist2 = 0;
      for (int j = 0; j < d; ++j) {
        const double r = z[j] - proj[j];
        dist2 += r * r;
      }
      if (std::sqrt(dist2) <= tol * 2.0) partial_hits[slot]++;
    }
  });

  SolidAngleEstimate est;
  est.samples = n;
  est.seed = seed;
  for (long long h : partial_hits) est.hits += h;
  est.value = static_cast<double>(est.hits) / static_cast<double>(n);
  est.se = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(n));
  return est;
}

}  // namespace arrlab
