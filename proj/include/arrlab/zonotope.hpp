#pragma once

#include <utility>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/lattice.hpp"

namespace arrlab {

/// The dual zonotope of an essential central arrangement: the Minkowski sum
/// of the normals. One vertex per region, at the signed sum of the
/// generators; the normal cone at that vertex is the closure of the region.
struct ZonotopeModel {
  int dim = 0;
  RatMat generators;  // the arrangement normals, in order
  std::vector<std::pair<std::string, RatVec>> vertices;  // (region signs, vertex)
};

/// f-vector and angle-sum vector of the zonotope, exact.
struct AngleProfile {
  std::vector<long long> f;  // f[0..d], f[d] = 1
  RatVec alpha;              // alpha[0..d], alpha[d] = 1
};

ZonotopeModel zonotope_vertices(const Arrangement& arr, const std::vector<SignVector>& regions);

/// Face numbers of the zonotope from the lattice alone:
/// f_k = sum over flats of rank k of sum_{y >= x} (-1)^{rho(y)-rho(x)} mu(x,y).
std::vector<long long> f_vector_zaslavsky(const IntersectionLattice& lat);

/// Angle sums as half the difference between the f-vector and the f-vector
/// of a generic shadow (computed on the truncated lattice, with the top
/// shadow face count taken as zero).
RatVec angle_sums_perles_shephard(const IntersectionLattice& lat);

/// Angle sums as absolute coefficients of the order-dual characteristic
/// polynomial. Must agree exactly with angle_sums_perles_shephard.
RatVec angle_sums_dual(const IntersectionLattice& lat);

/// (alpha_0, |mu(bottom, top)|); the two are equal for every essential
/// central arrangement.
std::pair<Rational, Rational> vertex_lemma_check(const IntersectionLattice& lat);

}  // namespace arrlab
