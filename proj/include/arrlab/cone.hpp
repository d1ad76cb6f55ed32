#pragma once

#include <cstdint>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/rational.hpp"

namespace arrlab {

/// A polyhedral cone {y : a_i . y >= 0}. `exact_rows` are the authoritative
/// rational inequality normals; `rows` are the floating-point normals used
/// by the numeric paths. For cones built in essentialized coordinates the
/// float rows are expressed in an orthonormal frame so that distances and
/// angles are faithful, while the exact rows keep the combinatorics.
struct Cone {
  int dim = 0;
  RatMat exact_rows;
  std::vector<std::vector<double>> rows;
  RatVec exact_witness;  // strict interior point when built from a region

  size_t size() const { return exact_rows.size(); }
};

/// The closed cone of a region: s_i * (eta_i . y) >= 0 with s_i the region
/// sign. Throws NotARegion unless `signs` is a realizable full sign vector.
Cone region_cone(const Arrangement& arr, const std::string& signs);

/// Same, in the coordinates of an essentialization; float rows are scaled to
/// the orthonormal frame of the essentialization basis so the cone is an
/// isometric copy of the original region intersected with the normal span.
Cone region_cone(const Essentialization& ess, const SignVector& region);

Cone cone_from_rows(RatMat rows, int dim);

struct ProjectionResult {
  std::vector<double> point;     // the projection pi_C(z)
  std::vector<double> residual;  // z - point, lies in the polar cone
  std::vector<int> tight;        // active constraint indices at the projection
  int face_dim = 0;              // dim minus numeric rank of the tight normals
};

/// Scratch buffers for the active-set solver; reuse across calls in hot loops.
struct NnlsWorkspace {
  std::vector<double> b, lambda, x, chol, rhs;
  std::vector<int> passive;
  std::vector<char> in_passive, banned;
};

/// Projects a single generated cone {G lambda : lambda >= 0}: finds
/// lambda >= 0 minimizing |G lambda - z|. Lawson-Hanson active set with
/// smallest-index (Bland) entering selection and an iteration cap of
/// 50 * #generators; the cap throws ConvergenceFailure.
class GeneratedConeProjector {
 public:
  GeneratedConeProjector(const std::vector<std::vector<double>>& generators, int dim);

  /// Writes G lambda into `out` (length dim); returns support size.
  int project(const double* z, double* out, NnlsWorkspace& ws) const;

  int dim() const { return d_; }
  int count() const { return m_; }
  double generator_norm(int i) const { return norms_[i]; }
  double dot_generator(int i, const double* v) const;

 private:
  int d_ = 0, m_ = 0;
  std::vector<double> gen_;    // m_ x d_, row i = generator i
  std::vector<double> gram_;   // m_ x m_
  std::vector<double> norms_;  // generator lengths
};

/// Shared numeric engine for one cone: projection onto the cone via the
/// polar-cone split (pi_C(z) = z - pi_{polar}(z)) plus tight-set and face
/// classification under a relative tolerance.
class ConeGeometry {
 public:
  ConeGeometry(const Cone& cone, double tol);

  ProjectionResult project(const double* z, NnlsWorkspace& ws) const;
  ProjectionResult project(const std::vector<double>& z, NnlsWorkspace& ws) const;

  uint64_t tight_mask(const double* y) const;
  int face_dim_of_mask(uint64_t mask) const;

  int dim() const { return cone_->dim; }
  const Cone& cone() const { return *cone_; }
  double tol() const { return tol_; }

 private:
  const Cone* cone_;
  GeneratedConeProjector polar_;
  std::vector<double> row_norms_;
  double tol_;
};

ProjectionResult project_point(const Cone& cone, const std::vector<double>& z, double tol = 1e-9);

/// Dimension of the face the projection of z lands in (relative interior).
int classify_projection(const Cone& cone, const std::vector<double>& z, double tol = 1e-9);

struct ExactProjection {
  RatVec point;
  RatVec residual;
  std::vector<int> tight;
  int face_dim = 0;
};

/// Reference projection by exhaustive search: for every linearly independent
/// subset of constraints, solve the equality-constrained least squares
/// exactly and accept the subset whose solution is feasible for the cone and
/// whose residual is a nonnegative combination of the subset's outward
/// generators. Exact over the rationals; intended for small instances.
ExactProjection project_point_exact(const Cone& cone, const RatVec& z);

/// Exact projection-volume profile for cones of dimension <= 2, computed
/// from the planar angle of the extreme rays. Index k of the result is the
/// fraction of directions with a k-dimensional projection.
std::vector<double> exact_volumes_rank2(const Cone& cone);

}  // namespace arrlab
