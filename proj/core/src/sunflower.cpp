#include "ncode/sunflower.hpp"

#include <random>

#include "ncode/linalg.hpp"

namespace ncode {

std::optional<int> is_k_flexible(const Code& c) {
  if (!c.contains(full_word(c.n))) return std::nullopt;
  int k = 0;
  for (Word w : c.words)
    if (w != full_word(c.n)) k = std::max(k, weight(w));
  return k;
}

namespace {

constexpr int kPetalLength = 10;  // default reach of a counterexample petal

// A coordinate petal: the unit box stretched to length M along +e_axis,
// then translated by `shift`.
HPolytope coordinate_petal(int dim, int axis, const Rat& len,
                           const RatVec& shift) {
  HPolytope p;
  p.dim = dim;
  for (int q = 0; q < dim; ++q) {
    RatVec a(dim, 0);
    a[q] = 1;
    Rat hi = q == axis ? len + Rat(1, 2) : Rat(1, 2);
    p.halfspaces.push_back({a, hi + shift[q]});
    for (Rat& x : a) x = -x;
    p.halfspaces.push_back({a, Rat(1, 2) - shift[q]});
  }
  return p;
}

// The unit box swept along -(1,...,1) for length M: axis walls plus the
// prism facets |x_p - x_q| <= 1.
HPolytope diagonal_petal(int dim, const Rat& len) {
  HPolytope p;
  p.dim = dim;
  for (int q = 0; q < dim; ++q) {
    RatVec a(dim, 0);
    a[q] = 1;
    p.halfspaces.push_back({a, Rat(1, 2)});
    for (Rat& x : a) x = -x;
    p.halfspaces.push_back({a, len + Rat(1, 2)});
  }
  for (int pq = 0; pq < dim; ++pq)
    for (int q = pq + 1; q < dim; ++q) {
      RatVec a(dim, 0);
      a[pq] = 1;
      a[q] = -1;
      p.halfspaces.push_back({a, 1});
      for (Rat& x : a) x = -x;
      p.halfspaces.push_back({a, 1});
    }
  return p;
}

HPolytope pooled_center(const std::vector<HPolytope>& petals, int dim) {
  HPolytope c;
  c.dim = dim;
  for (const auto& p : petals)
    for (const auto& h : p.halfspaces) c.halfspaces.push_back(h);
  return c;
}

}  // namespace

Sunflower build_counterexample(int dim, int k, bool skew) {
  if (dim < 2) throw PreconditionError("build_counterexample: dim >= 2");
  if (k < 1) throw PreconditionError("build_counterexample: k >= 1");
  if (dim * k > 16) throw CapError("build_counterexample: dim*k capped at 16");
  Sunflower s;
  s.dim = dim;
  s.k = k;
  Rat delta(1, 4 * k);
  // Copies shift along their own axis: the center's walls each stay shared
  // by every petal that should exit there, which keeps the arrangement
  // exactly k-flexible (a cross-direction shift would cut weight-(k+1)
  // slivers next to the center).
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) {
      RatVec shift(dim, 0);
      if (skew && j > 0) shift[i] = -j * delta;
      s.petals.push_back(coordinate_petal(dim, i, kPetalLength, shift));
      RatVec tip(dim, 0);
      tip[i] = kPetalLength;
      for (int q = 0; q < dim; ++q) tip[q] += shift[q];
      s.points.push_back(std::move(tip));
    }
  s.center = pooled_center(s.petals, dim);
  if (sunflower_hull_meets(s))
    throw PreconditionError("build_counterexample: internal: hull meets "
                            "the center");
  try {
    if (!certify_flexible(s))
      throw PreconditionError("build_counterexample: internal: arrangement "
                              "is not k-flexible");
    s.certified = true;
  } catch (const CapError&) {
    s.certified = false;  // guaranteed by construction instead
  }
  return s;
}

bool sunflower_hull_meets(const Sunflower& s) {
  return hull_meets(s.points, s.center, true);
}

bool flexible_trial(int dim, int k, int n, uint64_t seed) {
  return sunflower_hull_meets(random_flexible(dim, k, n, seed));
}

bool certify_flexible(const Sunflower& s) {
  Realization r;
  r.dim = s.dim;
  r.open = true;
  for (const auto& p : s.petals) r.sets.push_back(p);
  auto k = is_k_flexible(code_of_realization(r));
  return k && *k <= s.k;
}

int weight_k_census(const Sunflower& s) {
  Realization r;
  r.dim = s.dim;
  r.open = true;
  for (const auto& p : s.petals) r.sets.push_back(p);
  Code c = code_of_realization(r);
  int count = 0;
  for (Word w : c.words)
    if (w != full_word(c.n) && weight(w) == s.k) ++count;
  return count;
}

Sunflower random_flexible(int dim, int k, int n, uint64_t seed) {
  if (dim < 1 || k < 1 || n < 1)
    throw PreconditionError("random_flexible: positive parameters required");
  if (n > dim * k + 1)
    throw PreconditionError(
        "random_flexible: at most dim*k + 1 petals stay k-flexible here");
  if (n > 16) throw CapError("random_flexible: n capped at 16");
  std::mt19937_64 rng(seed);
  auto rnd = [&](int lo, int hi) {
    return (int)(lo + rng() % (uint64_t)(hi - lo + 1));
  };
  Rat delta(1, 4 * k);

  Sunflower s;
  s.dim = dim;
  s.k = k;
  std::vector<RatVec> pts;
  for (int t = 0; t < n; ++t) {
    Rat len = rnd(5, 20);
    RatVec x(dim);
    for (int q = 0; q < dim; ++q) x[q] = Rat(rnd(-3, 3), 8);
    if (t < dim * k) {
      int axis = t % dim;
      int copy = t / dim;
      RatVec shift(dim, 0);
      if (copy > 0) shift[axis] = -copy * delta;
      s.petals.push_back(coordinate_petal(dim, axis, len, shift));
      x[axis] = Rat(rnd(0, 8 * 5), 8) * len / 5;
      for (int q = 0; q < dim; ++q) x[q] += shift[q];
    } else {
      s.petals.push_back(diagonal_petal(dim, len));
      Rat along = Rat(rnd(0, 8 * 5), 8) * len / 5;
      for (int q = 0; q < dim; ++q) x[q] -= along;
    }
    pts.push_back(std::move(x));
  }

  // random invertible affine image of the whole picture
  RatMat A;
  for (;;) {
    A.assign(dim, RatVec(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) A[i][j] = rnd(-2, 2);
    if (rank(A) == dim) break;
  }
  RatVec t(dim);
  for (int j = 0; j < dim; ++j) t[j] = rnd(-5, 5);
  RatMat Ainv(dim, RatVec(dim));
  for (int col = 0; col < dim; ++col) {
    RatVec e(dim, 0);
    e[col] = 1;
    auto sol = solve_square(A, e);
    for (int row = 0; row < dim; ++row) Ainv[row][col] = (*sol)[row];
  }
  for (auto& petal : s.petals)
    for (auto& h : petal.halfspaces) {
      RatVec a2(dim, 0);
      for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) a2[j] += h.a[i] * Ainv[i][j];
      h.b += dot(a2, t);
      h.a = std::move(a2);
    }
  for (auto& p : pts) {
    RatVec y(dim, 0);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) y[i] += A[i][j] * p[j];
      y[i] += t[i];
    }
    p = std::move(y);
  }
  s.points = std::move(pts);
  s.center = pooled_center(s.petals, dim);
  return s;
}

namespace {

bool parts_meet(const std::vector<RatVec>& points,
                const std::vector<std::vector<int>>& parts) {
  int d = (int)points[0].size();
  int nv = 0;
  for (const auto& p : parts) nv += (int)p.size();
  RatMat A;
  RatVec b;
  auto add_eq = [&](RatVec row, const Rat& rhs) {
    RatVec neg(row.size());
    for (size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    A.push_back(std::move(row));
    b.push_back(rhs);
    A.push_back(std::move(neg));
    b.push_back(-rhs);
  };
  std::vector<int> offset(parts.size());
  int off = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    offset[i] = off;
    RatVec row(nv, 0);
    for (size_t j = 0; j < parts[i].size(); ++j) row[off + j] = 1;
    add_eq(std::move(row), 1);
    off += (int)parts[i].size();
  }
  for (size_t i = 1; i < parts.size(); ++i)
    for (int q = 0; q < d; ++q) {
      RatVec row(nv, 0);
      for (size_t j = 0; j < parts[0].size(); ++j)
        row[offset[0] + j] = points[parts[0][j]][q];
      for (size_t j = 0; j < parts[i].size(); ++j)
        row[offset[i] + j] = -points[parts[i][j]][q];
      add_eq(std::move(row), 0);
    }
  return simplex_max(A, b, RatVec(nv, 0)).status == LpStatus::Optimal;
}

bool assign(const std::vector<RatVec>& points, int r, size_t next,
            std::vector<std::vector<int>>& parts,
            std::vector<std::vector<int>>& found) {
  if (next == points.size()) {
    for (const auto& p : parts)
      if (p.empty()) return false;
    if (!parts_meet(points, parts)) return false;
    found = parts;
    return true;
  }
  size_t used = 0;
  while (used < parts.size() && !parts[used].empty()) ++used;
  for (size_t i = 0; i <= used && i < parts.size(); ++i) {
    parts[i].push_back((int)next);
    if (assign(points, r, next + 1, parts, found)) return true;
    parts[i].pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> tverberg_partition(
    const std::vector<RatVec>& points, int r) {
  if (points.empty() || r < 1)
    throw PreconditionError("tverberg_partition: need points and r >= 1");
  if (points.size() > 12)
    throw CapError("tverberg_partition: capped at 12 points");
  if (r == 1) {
    std::vector<int> all(points.size());
    for (size_t i = 0; i < points.size(); ++i) all[i] = (int)i;
    return std::vector<std::vector<int>>{all};
  }
  std::vector<std::vector<int>> parts(r), found;
  if (assign(points, r, 0, parts, found)) return found;
  return std::nullopt;
}

}  // namespace ncode
