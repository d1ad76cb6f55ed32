#pragma once

#include <optional>
#include <string>

#include "arrlab/rational.hpp"

namespace arrlab {

struct LpSolution {
  Rational value;
  RatVec x;
};

/// Maximizes c.x subject to A x <= b, x >= 0, where every entry of b is
/// nonnegative (so the slack basis is a feasible start). Exact arithmetic,
/// Bland's rule, guaranteed termination. Returns nullopt when unbounded.
std::optional<LpSolution> simplex_max(const RatMat& A, const RatVec& b, const RatVec& c);

struct WitnessResult {
  bool feasible = false;
  RatVec witness;  // present iff feasible
};

/// Decides whether a point y exists with
///   normals[i] . y  = 0        where signs[i] == '0'
///   normals[i] . y  > 0        where signs[i] == '+'
///   normals[i] . y  < 0        where signs[i] == '-'
/// and returns an exact rational witness when it does. Decided by maximizing
/// a margin variable bounded by 1; the open conditions hold iff the optimal
/// margin is positive.
WitnessResult find_sign_witness(const RatMat& normals, const std::string& signs, int dim);

}  // namespace arrlab
