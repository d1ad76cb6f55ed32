#include "arrlab/linalg.hpp"

#include <cmath>
#include <sstream>

namespace arrlab {

std::vector<int> rref_inplace(RatMat& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  size_t lead = 0;
  for (size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][col];
    for (size_t j = col; j < ncols; ++j) rows[lead][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[lead][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

RatMat rref(RatMat rows) {
  rref_inplace(rows);
  return rows;
}

int rank_of(const RatMat& rows) {
  RatMat copy = rows;
  return static_cast<int>(rref_inplace(copy).size());
}

std::string rref_key(const RatMat& rref_rows) {
  std::ostringstream os;
  for (const auto& row : rref_rows) {
    for (const auto& x : row) os << rational_str(x) << ",";
    os << ";";
  }
  return os.str();
}

bool in_row_span(const RatMat& rref_rows, const RatVec& v) {
  RatVec work = v;
  for (const auto& row : rref_rows) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (work[lead] == 0) continue;
    const Rational factor = work[lead];  // row has a unit leading entry
    for (size_t j = lead; j < work.size(); ++j) work[j] -= factor * row[j];
  }
  return is_zero_vec(work);
}

RatMat orthogonal_row_basis(const RatMat& rows) {
  RatMat basis;
  for (const auto& row : rows) {
    RatVec w = row;
    for (const auto& b : basis) {
      const Rational coeff = dot(w, b) / dot(b, b);
      for (size_t j = 0; j < w.size(); ++j) w[j] -= coeff * b[j];
    }
    if (!is_zero_vec(w)) basis.push_back(primitive_integer_direction(w));
  }
  return basis;
}

RatVec project_onto_row_span(const RatMat& rows, const RatVec& z) {
  const RatMat basis = orthogonal_row_basis(rows);
  RatVec proj(z.size(), Rational(0));
  for (const auto& b : basis) {
    const Rational coeff = dot(z, b) / dot(b, b);
    for (size_t j = 0; j < z.size(); ++j) proj[j] += coeff * b[j];
  }
  return proj;
}

std::optional<RatVec> solve_square(RatMat A, RatVec b) {
  const size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && A[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    const Rational inv = 1 / A[col][col];
    for (size_t j = col; j < n; ++j) A[col][j] *= inv;
    b[col] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || A[i][col] == 0) continue;
      const Rational factor = A[i][col];
      for (size_t j = col; j < n; ++j) A[i][j] -= factor * A[col][j];
      b[i] -= factor * b[col];
    }
  }
  return b;
}

int mgs_rank(const std::vector<std::vector<double>>& rows, double tol) {
  std::vector<std::vector<double>> basis;
  for (const auto& row : rows) {
    double norm2 = 0;
    for (double x : row) norm2 += x * x;
    if (norm2 <= 0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    std::vector<double> w(row.size());
    for (size_t j = 0; j < row.size(); ++j) w[j] = row[j] * inv;
    for (const auto& b : basis) {
      double c = 0;
      for (size_t j = 0; j < w.size(); ++j) c += w[j] * b[j];
      for (size_t j = 0; j < w.size(); ++j) w[j] -= c * b[j];
    }
    double res2 = 0;
    for (double x : w) res2 += x * x;
    if (res2 > tol * tol) {
      const double rinv = 1.0 / std::sqrt(res2);
      for (double& x : w) x *= rinv;
      basis.push_back(std::move(w));
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace arrlab
