#include "arrlab/zonotope.hpp"

#include <cassert>

#include "arrlab/errors.hpp"

namespace arrlab {

ZonotopeModel zonotope_vertices(const Arrangement& arr, const std::vector<SignVector>& regions) {
  if (!arr.essential()) throw NotEssential("zonotope vertices require an essential arrangement");
  ZonotopeModel z;
  z.dim = arr.dim;
  for (const auto& h : arr.hyperplanes) z.generators.push_back(h.normal);
  for (const auto& region : regions) {
    RatVec vertex(arr.dim, Rational(0));
    for (size_t i = 0; i < region.signs.size(); ++i) {
      const int s = (region.signs[i] == '+') ? 1 : -1;
      for (int j = 0; j < arr.dim; ++j) vertex[j] += s * z.generators[i][j];
    }
    z.vertices.emplace_back(region.signs, std::move(vertex));
  }
  return z;
}

namespace {

std::vector<long long> face_numbers(const IntersectionLattice& lat) {
  std::vector<long long> f(lat.arrangement_rank + 1, 0);
  for (size_t x = 0; x < lat.size(); ++x) {
    long long acc = 0;
    for (size_t y = 0; y < lat.size(); ++y) {
      if (!lat.leq[x][y]) continue;
      const long long term = lat.mobius[x][y];
      acc += ((lat.rho[y] - lat.rho[x]) % 2 == 0) ? term : -term;
    }
    f[lat.rho[x]] += acc;
  }
  return f;
}

}  // namespace

std::vector<long long> f_vector_zaslavsky(const IntersectionLattice& lat) {
  if (!lat.essential()) throw NotEssential("f-vector requires an essential lattice");
  std::vector<long long> f = face_numbers(lat);
  assert(f[lat.arrangement_rank] == 1);
  return f;
}

RatVec angle_sums_perles_shephard(const IntersectionLattice& lat) {
  if (!lat.essential() || lat.ambient_dim < 1)
    throw NotEssential("angle sums require an essential lattice in dimension >= 1");
  const int d = lat.ambient_dim;
  const std::vector<long long> f = f_vector_zaslavsky(lat);
  std::vector<long long> f_shadow = face_numbers(truncate(lat));
  f_shadow.resize(d, 0);
  f_shadow[d - 1] = 0;  // the shadow has no face in its own top dimension
  RatVec alpha(d + 1);
  for (int k = 0; k < d; ++k) alpha[k] = Rational(f[k] - f_shadow[k]) / 2;
  alpha[d] = 1;
  for (const auto& a : alpha) assert(a > 0);
  return alpha;
}

RatVec angle_sums_dual(const IntersectionLattice& lat) {
  if (!lat.essential() || lat.ambient_dim < 1)
    throw NotEssential("angle sums require an essential lattice in dimension >= 1");
  const CharPoly dual = dual_characteristic_polynomial(lat);
  RatVec alpha(lat.ambient_dim + 1);
  for (int i = 0; i <= lat.ambient_dim; ++i) alpha[i] = dual.abs_coeff(i);
  return alpha;
}

std::pair<Rational, Rational> vertex_lemma_check(const IntersectionLattice& lat) {
  const RatVec alpha = angle_sums_perles_shephard(lat);
  const long long mu = lat.mobius[lat.bottom][lat.top];
  return {alpha[0], Rational(mu >= 0 ? mu : -mu)};
}

}  // namespace arrlab
