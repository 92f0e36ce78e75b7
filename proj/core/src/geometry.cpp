#include "ncode/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ncode/linalg.hpp"

namespace ncode {

int max_hyperplanes() {
  if (const char* env = std::getenv("NCODE_MAX_HYPERPLANES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

bool point_in_vpolytope(const RatVec& p, const VPolytope& v) {
  if (v.points.empty()) return false;
  if ((int)p.size() != v.dim)
    throw PreconditionError("point_in_vpolytope: dimension mismatch");
  std::vector<LinCon> cons;
  for (int j = 0; j < v.dim; ++j) {
    LinCon c;
    c.a.assign(v.dim, 0);
    c.a[j] = 1;
    c.b = p[j];
    c.eq = true;
    cons.push_back(std::move(c));
  }
  return hull_feasible(v.points, cons).feasible;
}

namespace {

void canonical_scale(RatVec& a, Rat& b) {
  for (const Rat& x : a)
    if (x != 0) {
      Rat s = x < 0 ? Rat(-x) : x;
      for (Rat& y : a) y /= s;
      b /= s;
      return;
    }
}

void push_unique(std::vector<Halfspace>& hs, RatVec a, Rat b) {
  canonical_scale(a, b);
  for (const auto& h : hs)
    if (h.a == a && h.b == b) return;
  hs.push_back({std::move(a), std::move(b)});
}

// Facets of a full-dimensional hull in R^r by brute force over r-subsets.
std::vector<Halfspace> facet_search(const std::vector<RatVec>& pts, int r) {
  std::vector<Halfspace> out;
  int n = (int)pts.size();
  std::vector<int> idx(r);
  // iterate over r-combinations of [0, n)
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    std::vector<RatVec> sub;
    for (int i : idx) sub.push_back(pts[i]);
    if (auto hp = hyperplane_through(sub)) {
      auto [a, b] = *hp;
      bool above = false, below = false;
      for (const auto& p : pts) {
        Rat v = dot(a, p);
        above |= v > b;
        below |= v < b;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {
          for (Rat& x : a) x = -x;
          b = -b;
        }
        push_unique(out, std::move(a), std::move(b));
      }
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

HPolytope vrep_to_hrep(const VPolytope& v) {
  int d = v.dim;
  if (d > 4) throw CapError("vrep_to_hrep: dimension capped at 4");
  if (v.points.empty())
    throw PreconditionError("vrep_to_hrep: empty point list");
  std::vector<RatVec> pts = v.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  HPolytope out;
  out.dim = d;

  const RatVec& p0 = pts[0];
  RatMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec dir(d);
    for (int j = 0; j < d; ++j) dir[j] = pts[i][j] - p0[j];
    dirs.push_back(std::move(dir));
  }
  if (dirs.empty()) {
    for (int j = 0; j < d; ++j) {
      RatVec e(d, 0);
      e[j] = 1;
      out.halfspaces.push_back({e, p0[j]});
      for (Rat& x : e) x = -x;
      out.halfspaces.push_back({e, -p0[j]});
    }
    return out;
  }

  // affine-hull equalities from the normal directions
  for (const RatVec& nrm : nullspace(dirs)) {
    Rat b = dot(nrm, p0);
    RatVec a = nrm;
    push_unique(out.halfspaces, a, b);
    for (Rat& x : a) x = -x;
    push_unique(out.halfspaces, a, -b);
  }
  int r = rank(dirs);

  if (r == d) {
    for (auto& h : facet_search(pts, d)) push_unique(out.halfspaces, h.a, h.b);
    return out;
  }

  // coordinates within the affine hull: select r independent direction rows
  // as a basis, then r independent coordinate columns to invert
  RatMat basis;
  for (const auto& dir : dirs) {
    RatMat probe = basis;
    probe.push_back(dir);
    if (rank(probe) > (int)basis.size()) basis = std::move(probe);
    if ((int)basis.size() == r) break;
  }
  // B is d x r (columns = basis); pick r rows of B forming an invertible
  // r x r block
  std::vector<int> rows;
  RatMat block;
  for (int j = 0; j < d && (int)rows.size() < r; ++j) {
    RatMat probe = block;
    RatVec row(r);
    for (int t = 0; t < r; ++t) row[t] = basis[t][j];
    probe.push_back(row);
    if (rank(probe) > (int)block.size()) {
      block = std::move(probe);
      rows.push_back(j);
    }
  }
  // mapped[i] = y with p_i = p0 + B y, i.e. block^T y = (p_i - p0)[rows]
  RatMat blockT(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) blockT[i][j] = block[i][j];
  std::vector<RatVec> mapped;
  for (const auto& p : pts) {
    RatVec rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = p[rows[i]] - p0[rows[i]];
    auto y = solve_square(blockT, rhs);
    if (!y) throw PreconditionError("vrep_to_hrep: degenerate basis");
    mapped.push_back(*y);
  }
  // facet a.y <= b pulls back through y = blockT^{-1} (x - p0)[rows]
  for (auto& h : facet_search(mapped, r)) {
    // solve blockT^T z = a, then the pullback is z.(x - p0)[rows] <= b
    RatMat m(r, RatVec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = blockT[j][i];
    auto z = solve_square(m, h.a);
    if (!z) throw PreconditionError("vrep_to_hrep: degenerate pullback");
    RatVec a(d, 0);
    Rat b = h.b;
    for (int i = 0; i < r; ++i) {
      a[rows[i]] = (*z)[i];
      b += (*z)[i] * p0[rows[i]];
    }
    push_unique(out.halfspaces, std::move(a), std::move(b));
  }
  return out;
}

namespace {

struct SetCons {
  bool empty = true;
  std::vector<std::pair<int, bool>> reqs;  // (hyperplane index, wants >= b)
};

struct Arrangement {
  int dim;
  bool open;
  std::vector<Halfspace> hyps;  // canonical: leading coefficient +-... +1
  std::vector<SetCons> sets;
};

Arrangement build_arrangement(const Realization& r) {
  Arrangement arr;
  arr.dim = r.dim;
  arr.open = r.open;
  auto hyp_index = [&](RatVec a, Rat b) -> std::pair<int, bool> {
    bool flipped = false;
    for (const Rat& x : a)
      if (x != 0) {
        flipped = x < 0;
        break;
      }
    if (flipped) {
      for (Rat& x : a) x = -x;
      b = -b;
    }
    canonical_scale(a, b);
    for (size_t i = 0; i < arr.hyps.size(); ++i)
      if (arr.hyps[i].a == a && arr.hyps[i].b == b) return {(int)i, flipped};
    arr.hyps.push_back({std::move(a), std::move(b)});
    return {(int)arr.hyps.size() - 1, flipped};
  };
  for (const auto& sg : r.sets) {
    SetCons sc;
    const HPolytope* hp = std::get_if<HPolytope>(&sg);
    HPolytope converted;
    if (const VPolytope* vp = std::get_if<VPolytope>(&sg)) {
      if (r.open)
        throw PreconditionError(
            "code_of_realization: V-polytopes need a closed realization");
      if (vp->points.empty()) {
        arr.sets.push_back(std::move(sc));
        continue;
      }
      converted = vrep_to_hrep(*vp);
      hp = &converted;
    }
    if (hp) {
      sc.empty = false;
      std::set<std::pair<int, bool>> reqs;
      for (const auto& h : hp->halfspaces) {
        if ((int)h.a.size() != r.dim)
          throw PreconditionError("code_of_realization: bad halfspace dim");
        bool zero = true;
        for (const Rat& x : h.a) zero &= x == 0;
        if (zero)
          throw PreconditionError("code_of_realization: zero normal");
        reqs.insert(hyp_index(h.a, h.b));  // flipped means wants a.x >= b
      }
      sc.reqs.assign(reqs.begin(), reqs.end());
    }
    arr.sets.push_back(std::move(sc));
  }
  if ((int)arr.hyps.size() > max_hyperplanes())
    throw CapError("code_of_realization: " + std::to_string(arr.hyps.size()) +
                   " hyperplanes exceed the cap of " +
                   std::to_string(max_hyperplanes()));
  return arr;
}

struct CellDfs {
  const Arrangement& arr;
  std::vector<LinCon> cons;
  std::set<Word> patterns;
  std::map<Word, RatVec>* witnesses;
  // incremental membership: a set is out once one requirement fails, in once
  // all its requirements hold; branching stops when every set is decided
  std::vector<int> unmet;  // unresolved requirements per set
  std::vector<char> out;
  std::vector<std::vector<std::pair<int, bool>>> by_hyp;  // hyp -> (set, ge)
  int undecided = 0;

  explicit CellDfs(const Arrangement& a, std::map<Word, RatVec>* w)
      : arr(a), witnesses(w) {
    by_hyp.resize(arr.hyps.size());
    unmet.resize(arr.sets.size(), 0);
    out.resize(arr.sets.size(), 0);
    for (size_t i = 0; i < arr.sets.size(); ++i) {
      const SetCons& sc = arr.sets[i];
      if (sc.empty) {
        out[i] = 1;
        continue;
      }
      unmet[i] = (int)sc.reqs.size();
      if (unmet[i] > 0) ++undecided;
      for (auto [h, ge] : sc.reqs) by_hyp[h].push_back({(int)i, ge});
    }
  }

  Word pattern() const {
    Word p = 0;
    for (size_t i = 0; i < arr.sets.size(); ++i)
      if (!out[i] && unmet[i] == 0) p |= Word(1) << i;
    return p;
  }

  // applies the sign of hyperplane h to every set that constrains with it;
  // returns the touched sets so the caller can undo on backtrack
  std::vector<int> apply_sign(size_t h, int s) {
    std::vector<int> touched;
    for (auto [i, ge] : by_hyp[h]) {
      if (out[i] || unmet[i] == 0) continue;
      bool bad = arr.open ? (s != (ge ? 1 : -1)) : (s == (ge ? -1 : 1));
      touched.push_back(bad ? ~i : i);
      if (bad)
        out[i] = 1;
      else
        --unmet[i];
      if (bad || unmet[i] == 0) --undecided;
    }
    return touched;
  }

  void undo_sign(const std::vector<int>& touched) {
    for (int t : touched) {
      int i = t < 0 ? ~t : t;
      if (t < 0) {
        out[i] = 0;
        ++undecided;
      } else {
        if (unmet[i] == 0) ++undecided;
        ++unmet[i];
      }
    }
  }

  void emit(const RatVec& point) {
    Word p = pattern();
    if (patterns.insert(p).second && witnesses) (*witnesses)[p] = point;
  }

  void run(size_t h, const RatVec& point) {
    // hyperplanes only touching decided sets cannot change the pattern
    while (h < arr.hyps.size()) {
      bool relevant = false;
      for (auto [i, ge] : by_hyp[h])
        if (!out[i] && unmet[i] != 0) {
          relevant = true;
          break;
        }
      if (relevant) break;
      ++h;
    }
    if (undecided == 0 || h == arr.hyps.size()) {
      emit(point);
      return;
    }
    const Halfspace& hp = arr.hyps[h];
    Rat at = -hp.b;
    for (size_t j = 0; j < hp.a.size(); ++j) at += hp.a[j] * point[j];
    int have = at < 0 ? -1 : (at > 0 ? 1 : 0);
    for (int s : {-1, 0, 1}) {
      LinFeas f;
      if (s == have) {
        f.feasible = true;  // the current witness already sits on this side
        f.x = point;
      }
      LinCon c;
      if (s == 0) {
        c = {hp.a, hp.b, false, true};
      } else if (s < 0) {
        c = {hp.a, hp.b, true, false};
      } else {
        RatVec na(hp.a.size());
        for (size_t j = 0; j < hp.a.size(); ++j) na[j] = -hp.a[j];
        c = {std::move(na), -hp.b, true, false};
      }
      cons.push_back(std::move(c));
      if (s != have) f = lin_feasible(cons, arr.dim);
      if (f.feasible) {
        auto touched = apply_sign(h, s);
        run(h + 1, f.x);
        undo_sign(touched);
      }
      cons.pop_back();
    }
  }
};

}  // namespace

Code code_of_realization(const Realization& r,
                         std::map<Word, RatVec>* witnesses) {
  if (r.dim < 1 || (int)r.sets.size() < 1 ||
      (int)r.sets.size() > kMaxNeurons)
    throw PreconditionError("code_of_realization: bad dimensions");
  Arrangement arr = build_arrangement(r);
  CellDfs dfs(arr, witnesses);
  dfs.run(0, RatVec(r.dim, 0));
  if (!dfs.patterns.count(0))
    throw PreconditionError(
        "code_of_realization: sets cover the whole space, the empty "
        "codeword convention fails");
  std::vector<Word> words(dfs.patterns.begin(), dfs.patterns.end());
  return code_from_words((int)r.sets.size(), std::move(words));
}

HPolytope trim(const HPolytope& p, const Rat& eps) {
  HPolytope out = p;
  for (auto& h : out.halfspaces) h.b -= eps * l1_norm(h.a);
  return out;
}

namespace {

HPolytope inflate_poly(const HPolytope& p, const Rat& eps) {
  HPolytope out = p;
  for (auto& h : out.halfspaces) h.b += eps * l1_norm(h.a);
  return out;
}

HPolytope as_hpoly(const SetGeom& sg) {
  if (const HPolytope* hp = std::get_if<HPolytope>(&sg)) return *hp;
  return vrep_to_hrep(std::get<VPolytope>(sg));
}

}  // namespace

Realization trim_sets(const Realization& r, const Rat& eps) {
  Realization out;
  out.dim = r.dim;
  out.open = r.open;
  for (const auto& sg : r.sets) {
    if (std::holds_alternative<EmptySet>(sg)) {
      out.sets.push_back(EmptySet{});
    } else {
      out.sets.push_back(trim(as_hpoly(sg), eps));
    }
  }
  return out;
}

Realization close_realization(const Realization& r) {
  Realization out = r;
  out.open = false;
  return out;
}

std::pair<Realization, Rat> trim_realization(const Realization& r) {
  if (!r.open)
    throw PreconditionError("trim_realization: input must be open");
  std::map<Word, RatVec> wit;
  Code code = code_of_realization(r, &wit);
  if (!is_intersection_complete(code))
    throw PreconditionError(
        "trim_realization: the code is not intersection complete");
  Rat eps = 1;
  bool any = false;
  for (const auto& [c, p] : wit) {
    if (c == 0) continue;
    for (size_t i = 0; i < r.sets.size(); ++i) {
      if (!(c >> i & 1)) continue;
      for (const auto& h : as_hpoly(r.sets[i]).halfspaces) {
        Rat l1 = l1_norm(h.a);
        Rat slack = (h.b - dot(h.a, p)) / l1;
        if (!any || slack < eps) eps = slack;
        any = true;
      }
    }
  }
  eps /= 2;
  for (int tries = 0; tries < 40; ++tries) {
    Realization closed = close_realization(trim_sets(r, eps));
    if (code_of_realization(closed) == code) return {closed, eps};
    eps /= 2;
  }
  throw PreconditionError("trim_realization: no trim margin preserves the "
                          "code");
}

std::pair<Realization, Rat> inflate(const Realization& r,
                                    bool allow_non_complex) {
  if (r.open) throw PreconditionError("inflate: input must be closed");
  if ((int)r.sets.size() > 16) throw CapError("inflate: n capped at 16");
  std::vector<std::optional<HPolytope>> polys;
  for (const auto& sg : r.sets) {
    if (std::holds_alternative<EmptySet>(sg)) {
      polys.push_back(std::nullopt);
      continue;
    }
    HPolytope hp = as_hpoly(sg);
    std::vector<LinCon> cons;
    for (const auto& h : hp.halfspaces) cons.push_back({h.a, h.b});
    for (int j = 0; j < r.dim; ++j) {
      for (int sign : {1, -1}) {
        RatVec c(r.dim, 0);
        c[j] = sign;
        LpResult res = lin_maximize(cons, r.dim, c);
        if (res.status == LpStatus::Unbounded)
          throw PreconditionError("inflate: sets must be bounded");
      }
    }
    polys.push_back(std::move(hp));
  }
  std::map<Word, RatVec> wit;
  Code code = code_of_realization(r, &wit);
  if (!is_simplicial_complex(code) && !allow_non_complex)
    throw PreconditionError("inflate: the code is not a simplicial complex");

  Rat eps = 1;
  auto lower_to = [&](const Rat& v) { eps = std::min(eps, v); };
  // each atom witness must stay out of every set it avoids
  for (const auto& [c, p] : wit) {
    for (size_t j = 0; j < r.sets.size(); ++j) {
      if ((c >> j & 1) || !polys[j]) continue;
      Rat best = 0;
      bool found = false;
      for (const auto& h : polys[j]->halfspaces) {
        Rat viol = dot(h.a, p) - h.b;
        if (viol <= 0) continue;
        Rat margin = viol / l1_norm(h.a);
        if (!found || margin > best) best = margin;
        found = true;
      }
      if (!found)
        throw PreconditionError("inflate: witness inside an avoided set");
      lower_to(best);
    }
  }
  // empty intersections along minimal non-codewords must stay empty:
  // the least uniform inflation t making them meet is found by LP
  int n = (int)r.sets.size();
  for (Word sigma = 1; sigma < (Word(1) << n); ++sigma) {
    if (code.contains(sigma)) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if ((sigma >> j & 1) && !code.contains(sigma & ~(Word(1) << j)))
        minimal = false;
    if (!minimal) continue;
    bool with_empty = false;
    for (int j = 0; j < n; ++j)
      if ((sigma >> j & 1) && !polys[j]) with_empty = true;
    if (with_empty) continue;  // a genuinely empty set never meets anything
    // vars (x, t): minimize t with a.x - t |a|_1 <= b, t >= 0
    std::vector<LinCon> cons;
    for (int j = 0; j < n; ++j) {
      if (!(sigma >> j & 1)) continue;
      for (const auto& h : polys[j]->halfspaces) {
        LinCon lc;
        lc.a = h.a;
        lc.a.push_back(-l1_norm(h.a));
        lc.b = h.b;
        cons.push_back(std::move(lc));
      }
    }
    {
      LinCon lc;
      lc.a.assign(r.dim + 1, 0);
      lc.a[r.dim] = -1;
      lc.b = 0;
      cons.push_back(std::move(lc));
    }
    RatVec obj(r.dim + 1, 0);
    obj[r.dim] = -1;
    LpResult res = lin_maximize(cons, r.dim + 1, obj);
    if (res.status != LpStatus::Optimal) continue;  // never meets
    Rat tstar = -res.value;
    if (tstar == 0) {
      // For complexes every non-codeword has an empty intersection, so a
      // zero margin is impossible. Without that guarantee the intersection
      // may be nonempty yet covered by larger atoms; the retry loop below
      // is the only defense.
      if (!allow_non_complex)
        throw PreconditionError("inflate: internal: empty atom at zero margin");
      continue;
    }
    lower_to(tstar);
  }
  eps /= 2;

  for (int tries = 0; tries < 40; ++tries) {
    Realization out;
    out.dim = r.dim;
    out.open = true;
    for (const auto& p : polys) {
      if (p) {
        out.sets.push_back(inflate_poly(*p, eps));
      } else {
        out.sets.push_back(EmptySet{});
      }
    }
    if (code_of_realization(out) == code) return {out, eps};
    eps /= 2;
  }
  throw PreconditionError("inflate: no inflation margin preserves the code");
}

bool hull_meets(const std::vector<RatVec>& points, const HPolytope& target,
                bool open) {
  std::vector<LinCon> cons;
  for (const auto& h : target.halfspaces) cons.push_back({h.a, h.b, open});
  return hull_feasible(points, cons).feasible;
}

bool hull_meets(const std::vector<RatVec>& points, const VPolytope& target) {
  if (points.empty() || target.points.empty()) return false;
  int d = (int)points[0].size();
  int k = (int)points.size(), l = (int)target.points.size();
  RatMat A;
  RatVec b;
  auto add_eq = [&](const RatVec& row, const Rat& rhs) {
    A.push_back(row);
    b.push_back(rhs);
    RatVec neg(row.size());
    for (size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    A.push_back(std::move(neg));
    b.push_back(-rhs);
  };
  RatVec row(k + l, 0);
  for (int i = 0; i < k; ++i) row[i] = 1;
  add_eq(row, 1);
  row.assign(k + l, 0);
  for (int i = 0; i < l; ++i) row[k + i] = 1;
  add_eq(row, 1);
  for (int j = 0; j < d; ++j) {
    row.assign(k + l, 0);
    for (int i = 0; i < k; ++i) row[i] = points[i][j];
    for (int i = 0; i < l; ++i) row[k + i] = -target.points[i][j];
    add_eq(row, 0);
  }
  return simplex_max(A, b, RatVec(k + l, 0)).status == LpStatus::Optimal;
}

}  // namespace ncode
