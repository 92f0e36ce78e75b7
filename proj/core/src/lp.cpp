#include "ncode/lp.hpp"

#include <limits>
#include <optional>

namespace ncode {

namespace {

// Dense simplex tableau over exact rationals. Columns: structural vars,
// then slacks, optionally one phase-1 auxiliary at the end.
struct Tableau {
  RatMat t;                // m x (ncols+1), last column is the rhs
  std::vector<int> basic;  // basic column per row
  int ncols;

  Rat& rhs(int i) { return t[i].back(); }

  void pivot(int row, int col) {
    Rat inv = t[row][col];
    for (auto& v : t[row]) v /= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if ((int)i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    basic[row] = col;
  }

  // Maximizes obj (length ncols) with Bland's rule from a primal-feasible
  // basis. Returns false on unbounded.
  bool run(const RatVec& obj, Rat& value, RatVec& reduced) {
    for (;;) {
      // reduced cost: obj_j - sum over rows of obj_basic * t[i][j]
      reduced.assign(ncols, 0);
      value = 0;
      for (int j = 0; j < ncols; ++j) reduced[j] = obj[j];
      for (size_t i = 0; i < t.size(); ++i) {
        const Rat& cb = obj[basic[i]];
        if (cb == 0) continue;
        value += cb * rhs(i);
        for (int j = 0; j < ncols; ++j) reduced[j] -= cb * t[i][j];
      }
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (reduced[j] > 0) { enter = j; break; }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basic[i] < basic[leave]))
          { leave = (int)i; best = ratio; }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_max(const RatMat& A, const RatVec& b, const RatVec& c) {
  int m = (int)A.size();
  int n = (int)c.size();
  Tableau tb;
  tb.ncols = n + m;
  tb.t.assign(m, RatVec(tb.ncols + 1, 0));
  tb.basic.resize(m);
  for (int i = 0; i < m; ++i) {
    if ((int)A[i].size() != n)
      throw PreconditionError("simplex_max: ragged constraint matrix");
    for (int j = 0; j < n; ++j) tb.t[i][j] = A[i][j];
    tb.t[i][n + i] = 1;
    tb.rhs(i) = b[i];
    tb.basic[i] = n + i;
  }

  int worst = -1;
  for (int i = 0; i < m; ++i)
    if (tb.rhs(i) < 0 && (worst < 0 || tb.rhs(i) < tb.rhs(worst))) worst = i;
  Rat value;
  RatVec reduced;
  if (worst >= 0) {
    // Phase 1: auxiliary column, enters on the most negative row.
    int aux = tb.ncols++;
    for (int i = 0; i < m; ++i) {
      tb.t[i].insert(tb.t[i].begin() + aux, Rat(-1));
    }
    tb.pivot(worst, aux);
    RatVec obj(tb.ncols, 0);
    obj[aux] = -1;
    tb.run(obj, value, reduced);  // bounded by construction (aux >= 0)
    if (value != 0) return {LpStatus::Infeasible, 0, {}};
    for (int i = 0; i < m; ++i) {
      if (tb.basic[i] != aux) continue;
      int col = -1;
      for (int j = 0; j < aux; ++j)
        if (tb.t[i][j] != 0) { col = j; break; }
      if (col >= 0) {
        tb.pivot(i, col);
      } else {
        tb.t.erase(tb.t.begin() + i);
        tb.basic.erase(tb.basic.begin() + i);
      }
      break;
    }
    for (auto& row : tb.t) row.erase(row.begin() + aux);
    tb.ncols--;
  }

  RatVec obj(tb.ncols, 0);
  for (int j = 0; j < n; ++j) obj[j] = c[j];
  bool bounded = tb.run(obj, value, reduced);
  RatVec x(n, 0);
  for (size_t i = 0; i < tb.t.size(); ++i)
    if (tb.basic[i] < n) x[tb.basic[i]] = tb.rhs(i);
  if (!bounded) return {LpStatus::Unbounded, 0, std::move(x)};
  return {LpStatus::Optimal, value, std::move(x)};
}

namespace {

// Interval propagation for systems whose rows each touch one coordinate.
std::optional<LinFeas> axis_fast_path(const std::vector<LinCon>& cons, int d) {
  struct Bound {
    bool has = false;
    Rat v = 0;
    bool strict = false;
  };
  std::vector<Bound> lo(d), hi(d);
  auto tighten = [](Bound& b, const Rat& v, bool strict, bool upper) {
    if (!b.has || (upper ? v < b.v : v > b.v)) {
      b = {true, v, strict};
    } else if (v == b.v && strict) {
      b.strict = true;
    }
  };
  for (const auto& c : cons) {
    int nz = -1;
    for (int j = 0; j < d; ++j) {
      if (c.a[j] == 0) continue;
      if (nz >= 0) return std::nullopt;  // not axis-aligned
      nz = j;
    }
    if (nz < 0) {
      bool ok = c.eq ? c.b == 0 : (c.strict ? c.b > 0 : c.b >= 0);
      if (!ok) return LinFeas{false, {}};
      continue;
    }
    Rat v = c.b / c.a[nz];
    if (c.eq) {
      tighten(hi[nz], v, false, true);
      tighten(lo[nz], v, false, false);
    } else if (c.a[nz] > 0) {
      tighten(hi[nz], v, c.strict, true);
    } else {
      tighten(lo[nz], v, c.strict, false);
    }
  }
  LinFeas out;
  out.x.assign(d, 0);
  for (int j = 0; j < d; ++j) {
    if (lo[j].has && hi[j].has) {
      if (lo[j].v > hi[j].v) return LinFeas{false, {}};
      if (lo[j].v == hi[j].v) {
        if (lo[j].strict || hi[j].strict) return LinFeas{false, {}};
        out.x[j] = lo[j].v;
      } else {
        out.x[j] = (lo[j].v + hi[j].v) / 2;
      }
    } else if (lo[j].has) {
      out.x[j] = lo[j].v + 1;
    } else if (hi[j].has) {
      out.x[j] = hi[j].v - 1;
    }
  }
  out.feasible = true;
  return out;
}

}  // namespace

LinFeas lin_feasible(const std::vector<LinCon>& cons, int d) {
  for (const auto& c : cons)
    if ((int)c.a.size() != d)
      throw PreconditionError("lin_feasible: dimension mismatch");
  if (auto fast = axis_fast_path(cons, d)) return *fast;

  bool any_strict = false;
  for (const auto& c : cons) any_strict |= (c.strict && !c.eq);
  // vars: u_0..u_{d-1}, v_0..v_{d-1} with x = u - v, then delta if needed
  int nv = 2 * d + (any_strict ? 1 : 0);
  RatMat A;
  RatVec b;
  auto add_row = [&](const RatVec& a, const Rat& rhs, bool strict) {
    RatVec row(nv, 0);
    for (int j = 0; j < d; ++j) {
      row[j] = a[j];
      row[d + j] = -a[j];
    }
    if (strict) row[2 * d] = 1;
    A.push_back(std::move(row));
    b.push_back(rhs);
  };
  for (const auto& c : cons) {
    if (c.eq) {
      add_row(c.a, c.b, false);
      RatVec neg(c.a.size());
      for (size_t j = 0; j < c.a.size(); ++j) neg[j] = -c.a[j];
      add_row(neg, -c.b, false);
    } else {
      add_row(c.a, c.b, c.strict);
    }
  }
  RatVec obj(nv, 0);
  if (any_strict) {
    RatVec row(nv, 0);
    row[2 * d] = 1;
    A.push_back(std::move(row));
    b.push_back(1);
    obj[2 * d] = 1;
  }
  LpResult r = simplex_max(A, b, obj);
  if (r.status == LpStatus::Infeasible) return {false, {}};
  if (any_strict && r.value <= 0) return {false, {}};
  LinFeas out;
  out.feasible = true;
  out.x.assign(d, 0);
  for (int j = 0; j < d; ++j) out.x[j] = r.x[j] - r.x[d + j];
  return out;
}

LpResult lin_maximize(const std::vector<LinCon>& cons, int d,
                      const RatVec& c) {
  for (const auto& con : cons) {
    if ((int)con.a.size() != d)
      throw PreconditionError("lin_maximize: dimension mismatch");
    if (con.strict && !con.eq)
      throw PreconditionError("lin_maximize: strict rows not supported");
  }
  RatMat A;
  RatVec b;
  auto add_row = [&](const RatVec& a, const Rat& rhs) {
    RatVec row(2 * d, 0);
    for (int j = 0; j < d; ++j) {
      row[j] = a[j];
      row[d + j] = -a[j];
    }
    A.push_back(std::move(row));
    b.push_back(rhs);
  };
  for (const auto& con : cons) {
    add_row(con.a, con.b);
    if (con.eq) {
      RatVec neg(con.a.size());
      for (size_t j = 0; j < con.a.size(); ++j) neg[j] = -con.a[j];
      add_row(neg, -con.b);
    }
  }
  RatVec obj(2 * d, 0);
  for (int j = 0; j < d; ++j) {
    obj[j] = c[j];
    obj[d + j] = -c[j];
  }
  LpResult r = simplex_max(A, b, obj);
  if (r.status != LpStatus::Optimal) return r;
  RatVec x(d);
  for (int j = 0; j < d; ++j) x[j] = r.x[j] - r.x[d + j];
  r.x = std::move(x);
  return r;
}

LinFeas hull_feasible(const std::vector<RatVec>& pts,
                      const std::vector<LinCon>& cons) {
  if (pts.empty()) return {false, {}};
  int k = (int)pts.size();
  int d = (int)pts[0].size();
  bool any_strict = false;
  for (const auto& c : cons) any_strict |= (c.strict && !c.eq);
  int nv = k + (any_strict ? 1 : 0);
  RatMat A;
  RatVec b;
  auto add_row = [&](RatVec row, const Rat& rhs) {
    A.push_back(std::move(row));
    b.push_back(rhs);
  };
  {
    RatVec ones(nv, 0);
    for (int i = 0; i < k; ++i) ones[i] = 1;
    add_row(ones, 1);
    for (auto& v : ones) v = -v;
    add_row(std::move(ones), -1);
  }
  for (const auto& c : cons) {
    if ((int)c.a.size() != d)
      throw PreconditionError("hull_feasible: dimension mismatch");
    RatVec row(nv, 0);
    for (int i = 0; i < k; ++i) row[i] = dot(c.a, pts[i]);
    if (c.eq) {
      RatVec neg = row;
      for (auto& v : neg) v = -v;
      add_row(std::move(neg), -c.b);
      add_row(std::move(row), c.b);
    } else {
      if (c.strict) row[k] = 1;
      add_row(std::move(row), c.b);
    }
  }
  RatVec obj(nv, 0);
  if (any_strict) {
    RatVec row(nv, 0);
    row[k] = 1;
    add_row(std::move(row), 1);
    obj[k] = 1;
  }
  LpResult r = simplex_max(A, b, obj);
  if (r.status == LpStatus::Infeasible) return {false, {}};
  if (any_strict && r.value <= 0) return {false, {}};
  LinFeas out;
  out.feasible = true;
  out.x.assign(d, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) out.x[j] += r.x[i] * pts[i][j];
  return out;
}

}  // namespace ncode
