#include "arrlab/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "arrlab/errors.hpp"
#include "arrlab/linalg.hpp"

namespace arrlab {

Rational CharPoly::eval(const Rational& t) const {
  Rational acc = 0, p = 1;
  for (const auto& c : coeffs) {
    acc += c * p;
    p *= t;
  }
  return acc;
}

bool CharPoly::alternating_with_unit_lead() const {
  if (coeffs.empty() || coeffs.back() != 1) return false;
  const int deg = degree();
  for (int i = deg; i >= 0; --i) {
    const int expected = ((deg - i) % 2 == 0) ? 1 : -1;
    if (sign_of(coeffs[i]) != expected) return false;
  }
  return true;
}

Rational CharPoly::abs_coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return abs(coeffs[power]);
}

std::vector<std::string> CharPoly::coeff_strings_desc() const {
  std::vector<std::string> out;
  for (int i = degree(); i >= 0; --i) out.push_back(rational_str(coeffs[i]));
  return out;
}

namespace {

void fill_order_and_mobius(IntersectionLattice& lat) {
  const size_t n = lat.size();
  lat.leq.assign(n, std::vector<bool>(n, false));
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      if (lat.rho[x] > lat.rho[y]) continue;
      bool contained = true;
      for (const auto& row : lat.flats[x].basis) {
        if (!in_row_span(lat.flats[y].basis, row)) {
          contained = false;
          break;
        }
      }
      lat.leq[x][y] = contained;
    }
  }

  // Process targets in rank order so every strictly smaller interval is done.
  std::vector<int> by_rank(n);
  for (size_t i = 0; i < n; ++i) by_rank[i] = static_cast<int>(i);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return lat.rho[a] < lat.rho[b]; });
  lat.mobius.assign(n, std::vector<long long>(n, 0));
  for (size_t x = 0; x < n; ++x) {
    lat.mobius[x][x] = 1;
    for (int y : by_rank) {
      if (static_cast<size_t>(y) == x || !lat.leq[x][y]) continue;
      long long acc = 0;
      for (size_t z = 0; z < n; ++z) {
        if (static_cast<size_t>(z) != static_cast<size_t>(y) && lat.leq[x][z] && lat.leq[z][y])
          acc += lat.mobius[x][z];
      }
      lat.mobius[x][y] = -acc;
    }
  }
}

}  // namespace

IntersectionLattice build_lattice(const Arrangement& arr) {
  IntersectionLattice lat;
  lat.ambient_dim = arr.dim;
  lat.arrangement_rank = arr.rank;

  std::unordered_map<std::string, int> seen;
  std::deque<int> queue;
  auto add_flat = [&](RatMat basis) -> int {
    const std::string key = rref_key(basis);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    Flat f;
    f.id = static_cast<int>(lat.flats.size());
    f.dim = arr.dim - static_cast<int>(basis.size());
    for (size_t i = 0; i < arr.size(); ++i)
      if (in_row_span(basis, arr.normal(i))) f.hyperplane_set.push_back(static_cast<int>(i));
    f.basis = std::move(basis);
    seen.emplace(key, f.id);
    lat.flats.push_back(std::move(f));
    queue.push_back(lat.flats.back().id);
    return lat.flats.back().id;
  };

  lat.bottom = add_flat(RatMat{});
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < arr.size(); ++i) {
      const auto& hs = lat.flats[id].hyperplane_set;
      if (std::binary_search(hs.begin(), hs.end(), static_cast<int>(i))) continue;
      RatMat extended = lat.flats[id].basis;
      extended.push_back(arr.normal(i));
      rref_inplace(extended);
      add_flat(std::move(extended));
    }
  }

  lat.rho.resize(lat.size());
  for (size_t i = 0; i < lat.size(); ++i)
    lat.rho[i] = static_cast<int>(lat.flats[i].basis.size());
  lat.top = 0;
  for (size_t i = 0; i < lat.size(); ++i)
    if (lat.rho[i] > lat.rho[lat.top]) lat.top = static_cast<int>(i);
  assert(lat.rho[lat.top] == arr.rank);

  fill_order_and_mobius(lat);
  return lat;
}

CharPoly characteristic_polynomial(const IntersectionLattice& lat) {
  CharPoly chi;
  chi.coeffs.assign(lat.arrangement_rank + 1, Rational(0));
  for (size_t x = 0; x < lat.size(); ++x)
    chi.coeffs[lat.arrangement_rank - lat.rho[x]] += lat.mobius_bottom(static_cast<int>(x));
  return chi;
}

CharPoly dual_characteristic_polynomial(const IntersectionLattice& lat) {
  if (!lat.essential())
    throw NotEssential("dual characteristic polynomial requires an essential lattice");
  CharPoly chi;
  chi.coeffs.assign(lat.arrangement_rank + 1, Rational(0));
  for (size_t x = 0; x < lat.size(); ++x)
    if (lat.leq[x][lat.top]) chi.coeffs[lat.rho[x]] += lat.mobius[x][lat.top];
  return chi;
}

long long region_count_check(const IntersectionLattice& lat) {
  const Rational value = characteristic_polynomial(lat).eval(Rational(-1));
  const Rational count = (lat.arrangement_rank % 2 == 0) ? value : -value;
  assert(count.get_den() == 1 && count > 0);
  return static_cast<long long>(count.get_num().get_si());
}

namespace {

IntersectionLattice subposet(const IntersectionLattice& lat, const std::vector<int>& keep,
                             int new_rank) {
  IntersectionLattice out;
  out.ambient_dim = lat.ambient_dim;
  out.arrangement_rank = new_rank;
  std::vector<int> new_id(lat.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    new_id[keep[i]] = static_cast<int>(i);
    Flat f = lat.flats[keep[i]];
    f.id = static_cast<int>(i);
    out.flats.push_back(std::move(f));
    out.rho.push_back(lat.rho[keep[i]]);
  }
  out.leq.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b) out.leq[a][b] = lat.leq[keep[a]][keep[b]];
  return out;
}

void recompute_mobius_from_order(IntersectionLattice& lat) {
  const size_t n = lat.size();
  std::vector<int> by_rank(n);
  for (size_t i = 0; i < n; ++i) by_rank[i] = static_cast<int>(i);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return lat.rho[a] < lat.rho[b]; });
  lat.mobius.assign(n, std::vector<long long>(n, 0));
  for (size_t x = 0; x < n; ++x) {
    lat.mobius[x][x] = 1;
    for (int y : by_rank) {
      if (static_cast<size_t>(y) == x || !lat.leq[x][y]) continue;
      long long acc = 0;
      for (size_t z = 0; z < n; ++z)
        if (z != static_cast<size_t>(y) && lat.leq[x][z] && lat.leq[z][y])
          acc += lat.mobius[x][z];
      lat.mobius[x][y] = -acc;
    }
  }
}

}  // namespace

IntersectionLattice truncate(const IntersectionLattice& lat) {
  if (!lat.essential() || lat.ambient_dim < 1)
    throw NotEssential("truncation requires an essential lattice in dimension >= 1");
  const int r = lat.arrangement_rank;
  std::vector<int> keep;
  for (size_t i = 0; i < lat.size(); ++i)
    if (lat.rho[i] != r - 1) keep.push_back(static_cast<int>(i));
  IntersectionLattice out = subposet(lat, keep, r - 1);
  out.bottom = 0;
  out.top = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out.rho[i] == 0) out.bottom = static_cast<int>(i);
    if (out.rho[i] > out.rho[out.top]) out.top = static_cast<int>(i);
  }
  // The old top drops one rank; everything else keeps its rank.
  out.rho[out.top] = r - 1;
  recompute_mobius_from_order(out);
  return out;
}

IntersectionLattice lower_interval(const IntersectionLattice& lat, int flat_id) {
  if (flat_id < 0 || flat_id >= static_cast<int>(lat.size())) throw FlatNotFound();
  std::vector<int> keep;
  for (size_t i = 0; i < lat.size(); ++i)
    if (lat.leq[i][flat_id]) keep.push_back(static_cast<int>(i));
  IntersectionLattice out = subposet(lat, keep, lat.rho[flat_id]);
  out.bottom = 0;
  out.top = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out.rho[i] == 0) out.bottom = static_cast<int>(i);
    if (out.rho[i] > out.rho[out.top]) out.top = static_cast<int>(i);
  }
  recompute_mobius_from_order(out);
  return out;
}

int find_flat(const IntersectionLattice& lat, const RatMat& normal_span) {
  const std::string key = rref_key(rref(normal_span));
  for (const auto& f : lat.flats)
    if (rref_key(f.basis) == key) return f.id;
  throw FlatNotFound();
}

std::unordered_map<std::string, int> IntersectionLattice::span_index() const {
  std::unordered_map<std::string, int> idx;
  for (const auto& f : flats) idx.emplace(rref_key(f.basis), f.id);
  return idx;
}

}  // namespace arrlab
