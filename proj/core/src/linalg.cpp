#include "ncode/linalg.hpp"

namespace ncode {

namespace {

// Row-reduces A in place, returns pivot columns. Optional rhs is carried along.
std::vector<int> row_reduce(RatMat& A, RatVec* rhs) {
  std::vector<int> pivots;
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    Rat inv = A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] /= inv;
    if (rhs) (*rhs)[r] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_square(RatMat A, RatVec b) {
  size_t n = A.size();
  if (n == 0) return RatVec{};
  if (A[0].size() != n || b.size() != n)
    throw PreconditionError("solve_square: not a square system");
  auto pivots = row_reduce(A, &b);
  if (pivots.size() != n) return std::nullopt;
  return b;
}

int rank(RatMat A) {
  RatVec dummy;
  if (A.empty()) return 0;
  return (int)row_reduce(A, nullptr).size();
}

std::vector<RatVec> nullspace(RatMat A) {
  if (A.empty()) return {};
  size_t cols = A[0].size();
  auto pivots = row_reduce(A, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, 0);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -A[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::pair<RatVec, Rat>> hyperplane_through(
    const std::vector<RatVec>& pts) {
  if (pts.empty()) return std::nullopt;
  size_t d = pts[0].size();
  // Solve [p | 1] . (a, -b) = 0.
  RatMat M;
  for (const auto& p : pts) {
    RatVec row = p;
    row.push_back(1);
    M.push_back(std::move(row));
  }
  auto ns = nullspace(M);
  if (ns.size() != 1) return std::nullopt;
  RatVec a(ns[0].begin(), ns[0].begin() + d);
  bool all_zero = true;
  for (const Rat& x : a) all_zero &= (x == 0);
  if (all_zero) return std::nullopt;
  return std::make_pair(a, Rat(-ns[0][d]));
}

}  // namespace ncode
