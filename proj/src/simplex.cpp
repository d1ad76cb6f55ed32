#include "arrlab/simplex.hpp"

#include <cassert>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

// Dense tableau: rows are the m constraints, columns are the n structural
// variables followed by m slacks and the right-hand side.
struct Tableau {
  size_t m, n;
  RatMat t;                // m x (n + m + 1)
  RatVec obj;              // reduced costs, length n + m + 1 (last = -objective value)
  std::vector<int> basis;  // basis[i] = column basic in row i

  Tableau(const RatMat& A, const RatVec& b, const RatVec& c) : m(A.size()), n(c.size()) {
    t.assign(m, RatVec(n + m + 1, Rational(0)));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = b[i];
    }
    obj.assign(n + m + 1, Rational(0));
    for (size_t j = 0; j < n; ++j) obj[j] = c[j];
    basis.resize(m);
    for (size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);
  }

  void pivot(size_t row, size_t col) {
    const Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      const Rational f = obj[col];
      for (size_t j = 0; j <= n + m; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = static_cast<int>(col);
  }

  // Bland's rule: entering = lowest-index improving column, leaving = lowest
  // basic variable among the minimum-ratio rows.
  bool solve() {
    for (;;) {
      size_t enter = n + m;
      for (size_t j = 0; j < n + m; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == n + m) return true;  // optimal
      size_t leave = m;
      Rational best_ratio;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = t[i][n + m] / t[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::optional<LpSolution> simplex_max(const RatMat& A, const RatVec& b, const RatVec& c) {
  for (const auto& bi : b) assert(bi >= 0);
  Tableau tab(A, b, c);
  if (!tab.solve()) return std::nullopt;
  LpSolution sol;
  sol.x.assign(c.size(), Rational(0));
  for (size_t i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < static_cast<int>(c.size())) sol.x[tab.basis[i]] = tab.t[i][tab.n + tab.m];
  }
  sol.value = -tab.obj[tab.n + tab.m];
  return sol;
}

WitnessResult find_sign_witness(const RatMat& normals, const std::string& signs, int dim) {
  assert(normals.size() == signs.size());
  const size_t m = normals.size();
  const size_t d = static_cast<size_t>(dim);
  // Variables: u (d), v (d), margin t. y = u - v.
  const size_t nvars = 2 * d + 1;
  RatMat A;
  RatVec b;
  for (size_t i = 0; i < m; ++i) {
    const char s = signs[i];
    if (s == '0') {
      RatVec row(nvars, Rational(0));
      for (size_t j = 0; j < d; ++j) {
        row[j] = normals[i][j];
        row[d + j] = -normals[i][j];
      }
      A.push_back(row);
      b.push_back(0);
      for (auto& x : row) x = -x;
      A.push_back(row);
      b.push_back(0);
    } else {
      const int sgn = (s == '+') ? 1 : -1;
      // t - sgn * a_i . y <= 0
      RatVec row(nvars, Rational(0));
      for (size_t j = 0; j < d; ++j) {
        row[j] = -sgn * normals[i][j];
        row[d + j] = sgn * normals[i][j];
      }
      row[2 * d] = 1;
      A.push_back(row);
      b.push_back(0);
    }
  }
  {
    RatVec row(nvars, Rational(0));
    row[2 * d] = 1;
    A.push_back(row);
    b.push_back(1);
  }
  RatVec c(nvars, Rational(0));
  c[2 * d] = 1;
  auto sol = simplex_max(A, b, c);
  assert(sol.has_value());  // objective is capped at 1
  WitnessResult res;
  if (sol->value > 0) {
    res.feasible = true;
    res.witness.resize(d);
    for (size_t j = 0; j < d; ++j) res.witness[j] = sol->x[j] - sol->x[d + j];
  }
  return res;
}

}  // namespace arrlab
