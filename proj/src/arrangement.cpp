#include "arrlab/arrangement.hpp"

#include <algorithm>
#include <cassert>

#include "arrlab/errors.hpp"
#include "arrlab/linalg.hpp"
#include "arrlab/simplex.hpp"

namespace arrlab {

namespace {

RatMat normals_of(const Arrangement& arr) {
  RatMat rows;
  rows.reserve(arr.size());
  for (const auto& h : arr.hyperplanes) rows.push_back(h.normal);
  return rows;
}

int lex_class(char c) {
  switch (c) {
    case '+': return 0;
    case '0': return 1;
    default: return 2;
  }
}

}  // namespace

Arrangement canonicalize(const RatMat& raw_normals, int dim) {
  if (dim < 0) throw DimensionMismatch("negative dimension");
  Arrangement arr;
  arr.dim = dim;
  for (const auto& raw : raw_normals) {
    if (static_cast<int>(raw.size()) != dim)
      throw DimensionMismatch("normal has length " + std::to_string(raw.size()) +
                              ", expected " + std::to_string(dim));
    size_t lead = 0;
    while (lead < raw.size() && raw[lead] == 0) ++lead;
    if (lead == raw.size()) throw ZeroNormal();
    Hyperplane h{scaled(raw, 1 / raw[lead])};
    if (std::find(arr.hyperplanes.begin(), arr.hyperplanes.end(), h) == arr.hyperplanes.end())
      arr.hyperplanes.push_back(std::move(h));
  }
  arr.rank = rank_of(normals_of(arr));
  return arr;
}

Arrangement arrangement_from_oriented(RatMat normals, int dim) {
  Arrangement arr;
  arr.dim = dim;
  for (auto& n : normals) {
    assert(static_cast<int>(n.size()) == dim && !is_zero_vec(n));
    arr.hyperplanes.push_back(Hyperplane{std::move(n)});
  }
  arr.rank = rank_of(normals_of(arr));
  return arr;
}

Essentialization essentialize(const Arrangement& arr) {
  Essentialization out;
  out.index_shift = arr.dim - arr.rank;
  if (arr.essential()) {
    out.essential = arr;
    out.basis.assign(arr.dim, RatVec(arr.dim, Rational(0)));
    for (int j = 0; j < arr.dim; ++j) out.basis[j][j] = 1;
    return out;
  }
  out.basis = orthogonal_row_basis(rref(normals_of(arr)));
  assert(static_cast<int>(out.basis.size()) == arr.rank);
  RatMat restricted;
  restricted.reserve(arr.size());
  for (const auto& h : arr.hyperplanes) {
    RatVec coords(out.basis.size());
    for (size_t j = 0; j < out.basis.size(); ++j) coords[j] = dot(h.normal, out.basis[j]);
    restricted.push_back(std::move(coords));
  }
  out.essential = arrangement_from_oriented(std::move(restricted), arr.rank);
  assert(out.essential.rank == arr.rank);
  return out;
}

bool sign_lex_less(const std::string& a, const std::string& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const int ca = lex_class(a[i]), cb = lex_class(b[i]);
    if (ca != cb) return ca < cb;
  }
  return a.size() < b.size();
}

std::string signs_of_point(const Arrangement& arr, const RatVec& point) {
  std::string signs(arr.size(), '0');
  for (size_t i = 0; i < arr.size(); ++i) {
    const int s = sign_of(dot(arr.normal(i), point));
    signs[i] = (s > 0) ? '+' : (s < 0) ? '-' : '0';
  }
  return signs;
}

namespace {

// Shifts an interior witness off the new hyperplane without leaving its cell:
// w +- eps*normal keeps every previously strict sign as long as eps stays
// below |a_i.w| / (2 |a_i.normal| + 2) for all prior rows.
Rational perturbation_step(const Arrangement& arr, size_t upto, const RatVec& witness,
                           const RatVec& normal) {
  Rational eps = 1;
  for (size_t i = 0; i < upto; ++i) {
    const Rational value = dot(arr.normal(i), witness);
    assert(value != 0);
    const Rational drift = dot(arr.normal(i), normal);
    Rational bound = abs(value) / (2 * abs(drift) + 2);
    if (bound < eps) eps = bound;
  }
  return eps;
}

}  // namespace

std::vector<SignVector> enumerate_regions(const Arrangement& arr) {
  std::vector<SignVector> cells{{std::string(), RatVec(arr.dim, Rational(0))}};
  RatMat prefix_normals;
  for (size_t j = 0; j < arr.size(); ++j) {
    prefix_normals.push_back(arr.normal(j));
    std::vector<SignVector> next;
    next.reserve(2 * cells.size());
    for (auto& cell : cells) {
      const Rational value = dot(arr.normal(j), cell.witness);
      const int s = sign_of(value);
      if (s != 0) {
        const char near_side = (s > 0) ? '+' : '-';
        const char far_side = (s > 0) ? '-' : '+';
        auto far_check = find_sign_witness(prefix_normals, cell.signs + far_side, arr.dim);
        next.push_back({cell.signs + near_side, std::move(cell.witness)});
        if (far_check.feasible)
          next.push_back({cell.signs + far_side, std::move(far_check.witness)});
      } else {
        // Witness sits on the new hyperplane, so the cell straddles it.
        const Rational eps = perturbation_step(arr, j, cell.witness, arr.normal(j));
        RatVec plus = cell.witness, minus = cell.witness;
        for (int k = 0; k < arr.dim; ++k) {
          plus[k] += eps * arr.normal(j)[k];
          minus[k] -= eps * arr.normal(j)[k];
        }
        next.push_back({cell.signs + '+', std::move(plus)});
        next.push_back({cell.signs + '-', std::move(minus)});
      }
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(),
            [](const SignVector& a, const SignVector& b) { return sign_lex_less(a.signs, b.signs); });
  return cells;
}

std::vector<Face> enumerate_faces(const Arrangement& arr) {
  std::vector<SignVector> cells{{std::string(), RatVec(arr.dim, Rational(0))}};
  RatMat prefix_normals;
  for (size_t j = 0; j < arr.size(); ++j) {
    prefix_normals.push_back(arr.normal(j));
    std::vector<SignVector> next;
    for (auto& cell : cells) {
      const int s = sign_of(dot(arr.normal(j), cell.witness));
      const char own = (s > 0) ? '+' : (s < 0) ? '-' : '0';
      for (const char c : {'+', '0', '-'}) {
        if (c == own) {
          next.push_back({cell.signs + own, cell.witness});
        } else {
          auto check = find_sign_witness(prefix_normals, cell.signs + c, arr.dim);
          if (check.feasible) next.push_back({cell.signs + c, std::move(check.witness)});
        }
      }
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(),
            [](const SignVector& a, const SignVector& b) { return sign_lex_less(a.signs, b.signs); });
  std::vector<Face> faces;
  faces.reserve(cells.size());
  for (auto& cell : cells) {
    Face f;
    RatMat zero_rows;
    for (size_t i = 0; i < cell.signs.size(); ++i) {
      if (cell.signs[i] == '0') {
        f.zero_set.push_back(static_cast<int>(i));
        zero_rows.push_back(arr.normal(i));
      }
    }
    f.dim = arr.dim - rank_of(zero_rows);
    f.witness = cell.witness;
    f.cell = std::move(cell);
    faces.push_back(std::move(f));
  }
  return faces;
}

std::vector<long long> face_counts_by_dimension(const Arrangement& arr,
                                               const std::vector<Face>& faces) {
  std::vector<long long> counts(arr.dim + 1, 0);
  for (const auto& f : faces) counts[f.dim]++;
  return counts;
}

}  // namespace arrlab
