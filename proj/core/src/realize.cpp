#include "ncode/realize.hpp"

#include <algorithm>

#include "ncode/linalg.hpp"

namespace ncode {

std::vector<std::vector<int>> cyclic_facets(int D, int N) {
  if (D < 2 || D > 8) throw CapError("cyclic_facets: D must be in [2, 8]");
  if (N <= D || N > 12) throw CapError("cyclic_facets: N must be in (D, 12]");
  std::vector<std::vector<int>> out;
  std::vector<int> s(D);
  for (int i = 0; i < D; ++i) s[i] = i + 1;
  for (;;) {
    std::vector<bool> in(N + 1, false);
    for (int v : s) in[v] = true;
    bool ok = true;
    for (int i = 1; i <= N && ok; ++i) {
      if (in[i]) continue;
      int between = 0;
      for (int j = i + 1; j <= N && ok; ++j) {
        if (in[j]) { ++between; continue; }
        if (between % 2) ok = false;
      }
    }
    if (ok) out.push_back(s);
    int i = D - 1;
    while (i >= 0 && s[i] == N - D + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < D; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<RatVec> moment_curve(int D, int N) {
  std::vector<RatVec> verts;
  for (int t = 1; t <= N; ++t) {
    RatVec v(D);
    Rat p = 1;
    for (int j = 0; j < D; ++j) {
      p *= t;
      v[j] = p;
    }
    verts.push_back(std::move(v));
  }
  return verts;
}

std::vector<RatVec> polar_dual(const std::vector<RatVec>& verts,
                               const std::vector<std::vector<int>>& facets) {
  if (verts.empty()) throw PreconditionError("polar_dual: no vertices");
  int d = (int)verts[0].size();
  RatVec centroid(d, 0);
  for (const auto& v : verts)
    for (int j = 0; j < d; ++j) centroid[j] += v[j];
  for (int j = 0; j < d; ++j) centroid[j] /= (int)verts.size();
  std::vector<RatVec> shifted;
  for (const auto& v : verts) {
    RatVec s(d);
    for (int j = 0; j < d; ++j) s[j] = v[j] - centroid[j];
    shifted.push_back(std::move(s));
  }
  std::vector<RatVec> dual;
  for (const auto& f : facets) {
    std::vector<RatVec> fp;
    for (int idx : f) {
      if (idx < 1 || idx > (int)verts.size())
        throw PreconditionError("polar_dual: facet index out of range");
      fp.push_back(shifted[idx - 1]);
    }
    auto hp = hyperplane_through(fp);
    if (!hp) throw PreconditionError("polar_dual: degenerate facet");
    auto [a, b] = *hp;
    if (b == 0)
      throw PreconditionError("polar_dual: facet hyperplane through the "
                              "centroid");
    for (Rat& x : a) x /= b;
    // validity: the facet supports the polytope at level 1
    for (const auto& v : shifted)
      if (dot(a, v) > 1)
        throw PreconditionError("polar_dual: facet list is not supporting");
    dual.push_back(std::move(a));
  }
  return dual;
}

SchlegelDiagram schlegel(const std::vector<RatVec>& verts,
                         const std::vector<std::vector<int>>& facets,
                         const std::vector<std::pair<RatVec, Rat>>& ineqs,
                         int base) {
  if (base < 0 || base >= (int)facets.size() || facets.size() != ineqs.size())
    throw PreconditionError("schlegel: bad base facet");
  int d = (int)verts[0].size();
  const auto& [w, bw] = ineqs[base];
  RatVec cb(d, 0);
  for (int idx : facets[base])
    for (int j = 0; j < d; ++j) cb[j] += verts[idx - 1][j];
  for (int j = 0; j < d; ++j) cb[j] /= (int)facets[base].size();

  RatVec view;
  Rat lambda = 1;
  for (int tries = 0; tries < 128; ++tries, lambda /= 2) {
    RatVec x(d);
    for (int j = 0; j < d; ++j) x[j] = cb[j] + lambda * w[j];
    bool ok = dot(w, x) > bw;
    for (size_t f = 0; f < ineqs.size() && ok; ++f)
      if ((int)f != base) ok = dot(ineqs[f].first, x) < ineqs[f].second;
    if (ok) { view = std::move(x); break; }
  }
  if (view.empty())
    throw PreconditionError("schlegel: no valid viewpoint beyond the base "
                            "facet");

  SchlegelDiagram sd;
  sd.viewpoint = view;
  int drop = 0;
  for (int j = 1; j < d; ++j) {
    Rat aj = w[j] < 0 ? Rat(-w[j]) : w[j];
    Rat ad = w[drop] < 0 ? Rat(-w[drop]) : w[drop];
    if (aj > ad) drop = j;
  }
  sd.dropped = drop;
  Rat wx = dot(w, view);
  for (const auto& u : verts) {
    Rat t = (bw - wx) / (dot(w, u) - wx);
    RatVec img;
    for (int j = 0; j < d; ++j) {
      if (j == drop) continue;
      img.push_back(view[j] + t * (u[j] - view[j]));
    }
    sd.vertex_images.push_back(std::move(img));
  }
  return sd;
}

namespace {

RatVec centroid_of(const std::vector<RatVec>& pts) {
  RatVec c(pts[0].size(), 0);
  for (const auto& p : pts)
    for (size_t j = 0; j < p.size(); ++j) c[j] += p[j];
  for (Rat& x : c) x /= (int)pts.size();
  return c;
}

}  // namespace

RealizePlan realize_closed(const Code& c) {
  if (c.n < 2)
    throw PreconditionError("realize_closed: n >= 2 required");
  if (c.n > 20) throw CapError("realize_closed: n capped at 20");
  if (!is_intersection_complete(c))
    throw PreconditionError("realize_closed: code must be intersection "
                            "complete");
  RealizePlan plan;
  plan.code = c;
  plan.d = complex_dim(c);
  if (plan.d < 0) {
    // only the empty codeword: every set is empty
    plan.m = 1;
    plan.realization.dim = 1;
    plan.realization.sets.assign(c.n, EmptySet{});
    plan.scaffold.assign(c.n, VPolytope{1, {}});
    return plan;
  }
  plan.m = std::min(2 * plan.d + 1, c.n - 1);
  int n = c.n, m = plan.m;

  // vertex sets per scaffold cell, plus a generator for p_sigma
  std::vector<RatVec> cell_verts;           // shared vertex pool
  std::vector<std::vector<int>> cell_of(n);  // vertex ids per P_i
  std::vector<Word> vert_neurons;  // which neurons' cells contain vertex v

  if (m == n - 1) {
    plan.simplex_route = true;
    // base simplex u_1..u_n with the apex image at its barycenter
    std::vector<RatVec> u;
    for (int i = 0; i < n - 1; ++i) {
      RatVec e(m, 0);
      e[i] = 1;
      u.push_back(std::move(e));
    }
    u.push_back(RatVec(m, 0));
    RatVec bary = centroid_of(u);
    cell_verts = u;
    cell_verts.push_back(bary);
    // P_i: every u_j except u_i, plus the barycenter
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (j != i) cell_of[i].push_back(j);
      cell_of[i].push_back(n);
    }
  } else {
    if (n > 8)
      throw CapError("realize_closed: curve-polytope route capped at n = 8");
    int D = m + 1, N = n + 1;
    plan.curve_facets = cyclic_facets(D, N);
    auto verts = moment_curve(D, N);
    auto dual = polar_dual(verts, plan.curve_facets);
    // the dual polytope's facet j collects the dual vertices of the primal
    // facets through vertex j; its inequality is (v_j - centroid).x <= 1
    RatVec centroid = centroid_of(verts);
    std::vector<std::vector<int>> dual_facets(N);
    std::vector<std::pair<RatVec, Rat>> dual_ineqs;
    for (int j = 0; j < N; ++j) {
      for (size_t f = 0; f < plan.curve_facets.size(); ++f)
        for (int idx : plan.curve_facets[f])
          if (idx == j + 1) dual_facets[j].push_back((int)f + 1);
      RatVec a(D);
      for (int t = 0; t < D; ++t) a[t] = verts[j][t] - centroid[t];
      dual_ineqs.emplace_back(std::move(a), Rat(1));
    }
    SchlegelDiagram sd = schlegel(dual, dual_facets, dual_ineqs, N - 1);
    cell_verts = sd.vertex_images;
    for (size_t f = 0; f < plan.curve_facets.size(); ++f)
      for (int idx : plan.curve_facets[f])
        if (idx <= n) cell_of[idx - 1].push_back((int)f);
  }

  vert_neurons.assign(cell_verts.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int v : cell_of[i]) vert_neurons[v] |= Word(1) << i;

  for (int i = 0; i < n; ++i) {
    VPolytope p;
    p.dim = m;
    for (int v : cell_of[i]) p.points.push_back(cell_verts[v]);
    plan.scaffold.push_back(std::move(p));
  }

  // p_sigma: centroid of the shared vertices of the cells through sigma
  for (Word w : c.words) {
    if (w == 0) continue;
    std::vector<RatVec> shared;
    for (size_t v = 0; v < cell_verts.size(); ++v)
      if ((vert_neurons[v] & w) == w) shared.push_back(cell_verts[v]);
    if (shared.empty())
      throw PreconditionError("realize_closed: internal: codeword misses "
                              "the scaffold");
    plan.points[w] = centroid_of(shared);
  }

  plan.realization.dim = m;
  plan.realization.open = false;
  for (int i = 0; i < n; ++i) {
    VPolytope v;
    v.dim = m;
    for (Word w : trunk(c, Word(1) << i))
      if (w != 0) v.points.push_back(plan.points.at(w));
    if (v.points.empty()) {
      plan.realization.sets.push_back(EmptySet{});
    } else {
      plan.realization.sets.push_back(std::move(v));
    }
  }
  return plan;
}

VerifyReport verify_plan(const RealizePlan& plan, bool deep) {
  VerifyReport rep;
  const Code& c = plan.code;

  rep.closure_ok = true;
  Code comp = intersection_completion(c);
  for (Word w : comp.words)
    if (!c.contains(w) || !completion_membership(c, w)) {
      rep.closure_ok = false;
      rep.detail = "completion adds " + word_str(w, c.n);
      break;
    }

  rep.witnesses_ok = true;
  for (Word w : c.words) {
    if (w == 0 || !rep.witnesses_ok) continue;
    auto it = plan.points.find(w);
    if (it == plan.points.end()) {
      rep.witnesses_ok = false;
      rep.detail = "missing point for " + word_str(w, c.n);
      break;
    }
    for (int i = 0; i < c.n; ++i) {
      bool want = w >> i & 1;
      bool have = false;
      if (const VPolytope* v =
              std::get_if<VPolytope>(&plan.realization.sets[i]))
        have = point_in_vpolytope(it->second, *v);
      if (want != have) {
        rep.witnesses_ok = false;
        rep.detail = "witness of " + word_str(w, c.n) + " vs set " +
                     std::to_string(i + 1);
        break;
      }
    }
  }

  if (deep && plan.m <= 3 && plan.d >= 0) {
    try {
      rep.full_code_ok = code_of_realization(plan.realization) == c;
      if (!*rep.full_code_ok) rep.detail = "realization cuts a different code";
    } catch (const CapError&) {
      rep.full_code_ok = std::nullopt;  // over the hyperplane cap; skipped
    }
  }
  return rep;
}

}  // namespace ncode
