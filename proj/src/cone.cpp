#include "arrlab/cone.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "arrlab/errors.hpp"
#include "arrlab/linalg.hpp"
#include "arrlab/simplex.hpp"

namespace arrlab {

namespace {

std::vector<double> exact_row_to_double(const RatVec& row) { return to_double_vec(row); }

RatMat signed_rows(const Arrangement& arr, const std::string& signs) {
  RatMat rows;
  rows.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    rows.push_back(signs[i] == '+' ? arr.normal(i) : scaled(arr.normal(i), Rational(-1)));
  }
  return rows;
}

void validate_region_signs(const Arrangement& arr, const std::string& signs) {
  if (signs.size() != arr.size()) throw NotARegion(signs);
  for (char c : signs)
    if (c != '+' && c != '-') throw NotARegion(signs);
}

}  // namespace

Cone region_cone(const Arrangement& arr, const std::string& signs) {
  validate_region_signs(arr, signs);
  RatMat normals;
  for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);
  auto witness = find_sign_witness(normals, signs, arr.dim);
  if (!witness.feasible) throw NotARegion(signs);
  Cone cone;
  cone.dim = arr.dim;
  cone.exact_rows = signed_rows(arr, signs);
  for (const auto& row : cone.exact_rows) cone.rows.push_back(exact_row_to_double(row));
  cone.exact_witness = std::move(witness.witness);
  return cone;
}

Cone region_cone(const Essentialization& ess, const SignVector& region) {
  const Arrangement& arr = ess.essential;
  validate_region_signs(arr, region.signs);
  Cone cone;
  cone.dim = arr.dim;
  cone.exact_rows = signed_rows(arr, region.signs);
  std::vector<double> axis_scale(ess.basis.size());
  for (size_t j = 0; j < ess.basis.size(); ++j)
    axis_scale[j] = 1.0 / std::sqrt(to_double(dot(ess.basis[j], ess.basis[j])));
  for (const auto& row : cone.exact_rows) {
    std::vector<double> frow(row.size());
    for (size_t j = 0; j < row.size(); ++j) frow[j] = to_double(row[j]) * axis_scale[j];
    cone.rows.push_back(std::move(frow));
  }
  cone.exact_witness = region.witness;
  return cone;
}

Cone cone_from_rows(RatMat rows, int dim) {
  Cone cone;
  cone.dim = dim;
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != dim)
      throw DimensionMismatch("cone row has wrong length");
    if (is_zero_vec(row)) throw ZeroNormal();
  }
  cone.exact_rows = std::move(rows);
  for (const auto& row : cone.exact_rows) cone.rows.push_back(exact_row_to_double(row));
  return cone;
}

GeneratedConeProjector::GeneratedConeProjector(const std::vector<std::vector<double>>& generators,
                                               int dim)
    : d_(dim), m_(static_cast<int>(generators.size())) {
  gen_.resize(static_cast<size_t>(m_) * d_);
  norms_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    double n2 = 0;
    for (int j = 0; j < d_; ++j) {
      gen_[static_cast<size_t>(i) * d_ + j] = generators[i][j];
      n2 += generators[i][j] * generators[i][j];
    }
    norms_[i] = std::sqrt(n2);
  }
  gram_.resize(static_cast<size_t>(m_) * m_);
  for (int i = 0; i < m_; ++i) {
    for (int k = 0; k <= i; ++k) {
      double acc = 0;
      for (int j = 0; j < d_; ++j)
        acc += gen_[static_cast<size_t>(i) * d_ + j] * gen_[static_cast<size_t>(k) * d_ + j];
      gram_[static_cast<size_t>(i) * m_ + k] = acc;
      gram_[static_cast<size_t>(k) * m_ + i] = acc;
    }
  }
}

double GeneratedConeProjector::dot_generator(int i, const double* v) const {
  double acc = 0;
  for (int j = 0; j < d_; ++j) acc += gen_[static_cast<size_t>(i) * d_ + j] * v[j];
  return acc;
}

namespace {

// In-place Cholesky solve of M x = rhs for a k x k symmetric system packed
// row-major in `chol`. Fails (returns false) when a pivot drops below
// rel_floor times its original diagonal, signalling a dependent generator.
bool spd_solve(std::vector<double>& chol, std::vector<double>& rhs, int k, double rel_floor) {
  for (int i = 0; i < k; ++i) {
    const double orig = chol[static_cast<size_t>(i) * k + i];
    for (int t = 0; t < i; ++t) {
      const double l = chol[static_cast<size_t>(i) * k + t];
      chol[static_cast<size_t>(i) * k + i] -= l * l;
    }
    double pivot = chol[static_cast<size_t>(i) * k + i];
    if (!(pivot > rel_floor * std::abs(orig) + 1e-300)) return false;
    pivot = std::sqrt(pivot);
    chol[static_cast<size_t>(i) * k + i] = pivot;
    for (int r = i + 1; r < k; ++r) {
      double acc = chol[static_cast<size_t>(r) * k + i];
      for (int t = 0; t < i; ++t)
        acc -= chol[static_cast<size_t>(r) * k + t] * chol[static_cast<size_t>(i) * k + t];
      chol[static_cast<size_t>(r) * k + i] = acc / pivot;
    }
  }
  for (int i = 0; i < k; ++i) {
    double acc = rhs[i];
    for (int t = 0; t < i; ++t) acc -= chol[static_cast<size_t>(i) * k + t] * rhs[t];
    rhs[i] = acc / chol[static_cast<size_t>(i) * k + i];
  }
  for (int i = k - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int t = i + 1; t < k; ++t) acc -= chol[static_cast<size_t>(t) * k + i] * rhs[t];
    rhs[i] = acc / chol[static_cast<size_t>(i) * k + i];
  }
  return true;
}

}  // namespace

int GeneratedConeProjector::project(const double* z, double* out, NnlsWorkspace& ws) const {
  std::fill(out, out + d_, 0.0);
  if (m_ == 0) return 0;

  ws.b.resize(m_);
  ws.lambda.assign(m_, 0.0);
  ws.in_passive.assign(m_, 0);
  ws.banned.assign(m_, 0);
  ws.passive.clear();

  double znorm2 = 0;
  for (int j = 0; j < d_; ++j) znorm2 += z[j] * z[j];
  double max_gen_norm = 0;
  for (int i = 0; i < m_; ++i) max_gen_norm = std::max(max_gen_norm, norms_[i]);
  const double eps_w = 1e-12 * (1.0 + std::sqrt(znorm2)) * std::max(max_gen_norm, 1e-30);

  for (int i = 0; i < m_; ++i) ws.b[i] = dot_generator(i, z);

  const int cap = 50 * m_ + 50;
  int iter = 0;
  auto solve_passive = [&](std::vector<double>& solution) -> bool {
    const int k = static_cast<int>(ws.passive.size());
    ws.chol.resize(static_cast<size_t>(k) * k);
    ws.rhs.resize(k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c)
        ws.chol[static_cast<size_t>(r) * k + c] =
            gram_[static_cast<size_t>(ws.passive[r]) * m_ + ws.passive[c]];
      ws.rhs[r] = ws.b[ws.passive[r]];
    }
    if (!spd_solve(ws.chol, ws.rhs, k, 1e-12)) return false;
    solution = ws.rhs;
    return true;
  };

  for (;;) {
    if (++iter > cap) throw ConvergenceFailure("active-set projection exceeded iteration cap");
    // Entering variable: smallest index with positive reduced gradient.
    int enter = -1;
    for (int i = 0; i < m_; ++i) {
      if (ws.in_passive[i] || ws.banned[i]) continue;
      double w = ws.b[i];
      for (int p : ws.passive) w -= gram_[static_cast<size_t>(i) * m_ + p] * ws.lambda[p];
      if (w > eps_w) {
        enter = i;
        break;
      }
    }
    if (enter < 0) break;
    ws.passive.push_back(enter);
    ws.in_passive[enter] = 1;

    for (;;) {
      if (++iter > cap) throw ConvergenceFailure("active-set projection exceeded iteration cap");
      std::vector<double>& x = ws.x;
      if (!solve_passive(x)) {
        // Dependent direction adds nothing to the cone; drop and skip it.
        ws.in_passive[enter] = 0;
        ws.banned[enter] = 1;
        ws.passive.pop_back();
        break;
      }
      bool all_positive = true;
      for (size_t t = 0; t < ws.passive.size(); ++t)
        if (x[t] <= 0) all_positive = false;
      if (all_positive) {
        for (size_t t = 0; t < ws.passive.size(); ++t) ws.lambda[ws.passive[t]] = x[t];
        break;
      }
      double alpha = 1.0;
      for (size_t t = 0; t < ws.passive.size(); ++t) {
        if (x[t] > 0) continue;
        const double l = ws.lambda[ws.passive[t]];
        const double a = l / (l - x[t]);
        alpha = std::min(alpha, a);
      }
      for (size_t t = 0; t < ws.passive.size(); ++t) {
        const int i = ws.passive[t];
        ws.lambda[i] += alpha * (x[t] - ws.lambda[i]);
      }
      std::vector<int> still;
      bool removed = false;
      for (int i : ws.passive) {
        if (!removed && ws.lambda[i] <= 1e-14 * (1.0 + std::abs(ws.b[i]))) {
          ws.lambda[i] = 0.0;
          ws.in_passive[i] = 0;
          removed = true;  // drop the lowest-index vanished variable
          continue;
        }
        still.push_back(i);
      }
      ws.passive = std::move(still);
      std::fill(ws.banned.begin(), ws.banned.end(), 0);
      if (!removed) break;  // numerical stall guard; solution is usable
    }
  }

  for (int p : ws.passive)
    for (int j = 0; j < d_; ++j) out[j] += ws.lambda[p] * gen_[static_cast<size_t>(p) * d_ + j];
  return static_cast<int>(ws.passive.size());
}

ConeGeometry::ConeGeometry(const Cone& cone, double tol)
    : cone_(&cone),
      polar_(
          [&cone] {
            std::vector<std::vector<double>> polar_gens = cone.rows;
            for (auto& row : polar_gens)
              for (auto& x : row) x = -x;
            return polar_gens;
          }(),
          cone.dim),
      tol_(tol) {
  row_norms_.resize(cone.rows.size());
  for (size_t i = 0; i < cone.rows.size(); ++i) {
    double n2 = 0;
    for (double x : cone.rows[i]) n2 += x * x;
    row_norms_[i] = std::sqrt(n2);
  }
}

uint64_t ConeGeometry::tight_mask(const double* y) const {
  assert(cone_->size() <= 64);
  double ynorm2 = 0;
  for (int j = 0; j < cone_->dim; ++j) ynorm2 += y[j] * y[j];
  const double scale = tol_ * (1.0 + std::sqrt(ynorm2));
  uint64_t mask = 0;
  for (size_t i = 0; i < cone_->rows.size(); ++i) {
    double v = 0;
    for (int j = 0; j < cone_->dim; ++j) v += cone_->rows[i][j] * y[j];
    if (std::abs(v) <= scale * row_norms_[i]) mask |= (uint64_t{1} << i);
  }
  return mask;
}

int ConeGeometry::face_dim_of_mask(uint64_t mask) const {
  std::vector<std::vector<double>> tight_rows;
  for (size_t i = 0; i < cone_->rows.size(); ++i)
    if (mask & (uint64_t{1} << i)) tight_rows.push_back(cone_->rows[i]);
  return cone_->dim - mgs_rank(tight_rows, tol_);
}

ProjectionResult ConeGeometry::project(const double* z, NnlsWorkspace& ws) const {
  ProjectionResult res;
  res.residual.resize(cone_->dim);
  polar_.project(z, res.residual.data(), ws);
  res.point.resize(cone_->dim);
  for (int j = 0; j < cone_->dim; ++j) res.point[j] = z[j] - res.residual[j];
  const uint64_t mask = tight_mask(res.point.data());
  for (size_t i = 0; i < cone_->rows.size(); ++i)
    if (mask & (uint64_t{1} << i)) res.tight.push_back(static_cast<int>(i));
  res.face_dim = face_dim_of_mask(mask);
  return res;
}

ProjectionResult ConeGeometry::project(const std::vector<double>& z, NnlsWorkspace& ws) const {
  assert(static_cast<int>(z.size()) == cone_->dim);
  return project(z.data(), ws);
}

ProjectionResult project_point(const Cone& cone, const std::vector<double>& z, double tol) {
  ConeGeometry geom(cone, tol);
  NnlsWorkspace ws;
  return geom.project(z, ws);
}

int classify_projection(const Cone& cone, const std::vector<double>& z, double tol) {
  return project_point(cone, z, tol).face_dim;
}

ExactProjection project_point_exact(const Cone& cone, const RatVec& z) {
  const int d = cone.dim;
  const size_t m = cone.size();
  if (m > 20) throw Error("exact projection is limited to 20 constraints");
  assert(static_cast<int>(z.size()) == d);

  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) > d) continue;
    RatMat rows;
    std::vector<int> subset;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (uint64_t{1} << i)) {
        rows.push_back(cone.exact_rows[i]);
        subset.push_back(static_cast<int>(i));
      }
    }
    if (rank_of(rows) != static_cast<int>(rows.size())) continue;

    RatVec residual = project_onto_row_span(rows, z);
    RatVec point(d);
    for (int j = 0; j < d; ++j) point[j] = z[j] - residual[j];

    bool primal = true;
    for (size_t i = 0; i < m && primal; ++i)
      if (dot(cone.exact_rows[i], point) < 0) primal = false;
    if (!primal) continue;

    // residual = sum mu_i a_i must have every mu_i <= 0 so that it is a
    // nonnegative combination of the outward generators -a_i.
    bool dual = true;
    if (!rows.empty()) {
      const size_t k = rows.size();
      RatMat gram(k, RatVec(k));
      RatVec rhs(k);
      for (size_t a = 0; a < k; ++a) {
        for (size_t b = 0; b < k; ++b) gram[a][b] = dot(rows[a], rows[b]);
        rhs[a] = dot(rows[a], residual);
      }
      auto mu = solve_square(gram, rhs);
      assert(mu.has_value());
      for (const auto& v : *mu)
        if (v > 0) dual = false;
    } else {
      dual = is_zero_vec(residual);
    }
    if (!dual) continue;

    ExactProjection out;
    out.point = std::move(point);
    out.residual = std::move(residual);
    RatMat tight_rows;
    for (size_t i = 0; i < m; ++i) {
      if (dot(cone.exact_rows[i], out.point) == 0) {
        out.tight.push_back(static_cast<int>(i));
        tight_rows.push_back(cone.exact_rows[i]);
      }
    }
    out.face_dim = d - rank_of(tight_rows);
    return out;
  }
  throw Error("exact projection failed to certify any constraint subset");
}

std::vector<double> exact_volumes_rank2(const Cone& cone) {
  if (cone.dim > 2) throw NotRank2("exact volume profile requires dimension <= 2");
  if (cone.dim == 0) return {1.0};
  if (cone.dim == 1) {
    if (cone.exact_rows.empty()) return {0.0, 1.0};
    int s = 0;
    for (const auto& row : cone.exact_rows) {
      const int rs = sign_of(row[0]);
      if (s == 0) s = rs;
      if (rs != s) throw NotRank2("one-dimensional cone degenerates to the origin");
    }
    return {0.5, 0.5};
  }
  if (cone.exact_rows.empty()) return {0.0, 0.0, 1.0};

  RatMat rays;
  for (const auto& a : cone.exact_rows) {
    for (const RatVec cand : {RatVec{-a[1], a[0]}, RatVec{a[1], -a[0]}}) {
      bool ok = true;
      for (const auto& row : cone.exact_rows)
        if (dot(row, cand) < 0) ok = false;
      if (!ok) continue;
      const RatVec prim = primitive_integer_direction(cand);
      if (std::find(rays.begin(), rays.end(), prim) == rays.end()) rays.push_back(prim);
    }
  }
  if (rays.size() != 2) throw NotRank2("cone is not a full-dimensional planar cone");

  const double ux = to_double(rays[0][0]), uy = to_double(rays[0][1]);
  const double vx = to_double(rays[1][0]), vy = to_double(rays[1][1]);
  const double cross = ux * vy - uy * vx;
  const double dotp = ux * vx + uy * vy;
  const double theta = std::atan2(std::abs(cross), dotp);  // in [0, pi]
  const double interior = theta / (2.0 * 3.14159265358979323846264338327950288);
  return {0.5 - interior, 0.5, interior};
}

}  // namespace arrlab
