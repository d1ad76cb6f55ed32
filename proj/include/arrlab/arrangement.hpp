#pragma once

#include <string>
#include <vector>

#include "arrlab/rational.hpp"

namespace arrlab {

struct Hyperplane {
  RatVec normal;  // nonzero, length = ambient dimension

  bool operator==(const Hyperplane& other) const { return normal == other.normal; }
};

/// A finite central arrangement: every hyperplane passes through the origin.
struct Arrangement {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
  int rank = 0;  // dimension of the span of the normals, cached

  size_t size() const { return hyperplanes.size(); }
  const RatVec& normal(size_t i) const { return hyperplanes[i].normal; }
  bool essential() const { return rank == dim; }
};

/// Validates raw normals and builds an arrangement: zero vectors are
/// rejected, each normal is scaled so its first nonzero entry is +1, and
/// scalar multiples collapse to a single hyperplane (first occurrence wins).
Arrangement canonicalize(const RatMat& raw_normals, int dim);

/// Builds an arrangement from normals that are already pairwise
/// non-proportional and nonzero, keeping their orientation (no rescaling).
/// Used where sign vectors must stay aligned with a parent arrangement.
Arrangement arrangement_from_oriented(RatMat normals, int dim);

/// A combinatorial cell recorded as one character per hyperplane ('+', '0',
/// '-') together with an exact interior point certifying realizability.
struct SignVector {
  std::string signs;
  RatVec witness;
};

struct Face {
  SignVector cell;
  std::vector<int> zero_set;  // indices where the sign is '0'
  int dim = 0;                // ambient dim minus rank of the zero-set normals
  RatVec witness;             // relative-interior point (same as cell.witness)
};

/// Restriction of a central arrangement to the span V of its normals,
/// expressed in coordinates for V. Regions correspond one to one with the
/// original regions (identical sign vectors), the intersection lattice is
/// isomorphic, and projection-dimension statistics shift by index_shift.
struct Essentialization {
  Arrangement essential;  // dimension = rank of the input
  RatMat basis;           // rows: pairwise-orthogonal integer vectors spanning V
  int index_shift = 0;    // dim - rank of the input
};

Essentialization essentialize(const Arrangement& arr);

/// Sign-string ordering used for all region/face output: lexicographic with
/// '+' < '0' < '-'.
bool sign_lex_less(const std::string& a, const std::string& b);

std::string signs_of_point(const Arrangement& arr, const RatVec& point);

/// All regions (full sign vectors, no '0') with exact interior witnesses,
/// sorted by sign_lex_less. Built by inserting hyperplanes one at a time and
/// splitting the cells the new hyperplane cuts; feasibility of the far side
/// is decided by exact LP.
std::vector<SignVector> enumerate_regions(const Arrangement& arr);

/// All realizable covectors (faces of every dimension), sorted by
/// sign_lex_less. Includes the all-zero cell and every region.
std::vector<Face> enumerate_faces(const Arrangement& arr);

/// Face counts indexed by dimension 0..dim.
std::vector<long long> face_counts_by_dimension(const Arrangement& arr,
                                               const std::vector<Face>& faces);

}  // namespace arrlab
