#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/rational.hpp"

namespace arrlab {

/// An element of the intersection lattice: a subspace obtained by
/// intersecting hyperplanes, identified by the canonical RREF basis of the
/// span of its defining normals.
struct Flat {
  int id = 0;
  RatMat basis;                     // RREF rows spanning the normal space
  int dim = 0;                      // dimension of the flat as a subspace
  std::vector<int> hyperplane_set;  // indices of hyperplanes containing it
};

struct CharPoly {
  RatVec coeffs;  // coeffs[i] = coefficient of t^i

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& t) const;
  /// Leading coefficient 1 and nonzero coefficients of strictly alternating
  /// sign from the top degree down.
  bool alternating_with_unit_lead() const;
  Rational abs_coeff(int power) const;
  std::vector<std::string> coeff_strings_desc() const;

  bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }
};

/// The intersection lattice: flats ordered by reverse inclusion (x <= y iff
/// y, as a subspace, is contained in x), graded by codimension, with the
/// full Mobius table. Also reused for derived posets (truncations,
/// intervals), where `rho` is the authoritative grading.
struct IntersectionLattice {
  int ambient_dim = 0;
  int arrangement_rank = 0;
  std::vector<Flat> flats;
  std::vector<int> rho;                   // rank of each flat
  std::vector<std::vector<bool>> leq;     // leq[x][y]: x <= y
  std::vector<std::vector<long long>> mobius;  // mobius[x][y], valid when leq[x][y]
  int bottom = 0;
  int top = -1;

  size_t size() const { return flats.size(); }
  long long mobius_bottom(int x) const { return mobius[bottom][x]; }
  bool essential() const { return arrangement_rank == ambient_dim; }
  /// y covers x (graded: x < y with consecutive ranks).
  bool covers(int x, int y) const { return x != y && leq[x][y] && rho[y] == rho[x] + 1; }
  /// Map from rref_key of a normal span to the flat id.
  std::unordered_map<std::string, int> span_index() const;
};

/// Builds L(A) by breadth-first closure: repeatedly intersect known flats
/// with single hyperplanes and deduplicate by the canonical RREF key.
IntersectionLattice build_lattice(const Arrangement& arr);

/// Poset-rank characteristic polynomial (degree = arrangement rank).
CharPoly characteristic_polynomial(const IntersectionLattice& lat);

/// Characteristic polynomial of the order dual: coefficient of t^i is the
/// sum of mobius(x, top) over flats of rank i. Requires an essential lattice.
CharPoly dual_characteristic_polynomial(const IntersectionLattice& lat);

/// Number of regions predicted by the lattice: (-1)^r chi(-1).
long long region_count_check(const IntersectionLattice& lat);

/// The lattice with its coatoms removed and the top re-ranked one step
/// lower: the lattice of a generic one-dimension-down projection of the
/// arrangement. Requires an essential lattice with ambient_dim >= 1.
IntersectionLattice truncate(const IntersectionLattice& lat);

/// The interval [bottom, x] as its own lattice.
IntersectionLattice lower_interval(const IntersectionLattice& lat, int flat_id);

int find_flat(const IntersectionLattice& lat, const RatMat& normal_span);

}  // namespace arrlab
