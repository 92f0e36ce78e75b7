#include "ncode/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "ncode/families.hpp"

namespace ncode {

std::pair<int, int> t_n_bounds(int n) {
  if (n < 1) throw PreconditionError("t_n_bounds: n >= 1 required");
  static const int exact[] = {1, 2, 3, 3, 4};
  if (n <= 5) return {exact[n - 1], exact[n - 1]};
  // beyond the known table: grows by at most one per step, and is at
  // least ceil(n/2)
  int lower = std::max((n + 1) / 2, 4);
  int upper = 4 + (n - 5);
  return {lower, upper};
}

int compute_k(const Code& c, const Code& d) {
  for (Word w : d.words)
    if (!c.contains(w)) throw PreconditionError("compute_k: D not in C");
  std::vector<Word> maxd = maximal_codewords(d);
  if (!maxd.empty() && maxd[0] == 0) maxd.erase(maxd.begin());
  int m = (int)maxd.size();
  if (m > 20) throw CapError("compute_k: more than 20 maximal codewords");
  if (m == 0) return 0;
  auto in_complex = [&](Word u) {
    for (Word w : c.words)
      if ((u & w) == u) return true;
    return false;
  };
  int best = 0;
  for (uint32_t s = 1; s < (1u << m); ++s) {
    int card = __builtin_popcount(s);
    if (card <= best) continue;
    Word u = 0;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) u |= maxd[i];
    if (in_complex(u)) best = card;
  }
  return best;
}

std::pair<int, int> scd_bounds(const Code& c, const Code& d) {
  std::vector<Word> maxd = maximal_codewords(d);
  if (!maxd.empty() && maxd[0] == 0) maxd.erase(maxd.begin());
  int m = (int)maxd.size();
  int k = compute_k(c, d);
  if (m == 0 || k == 0) return {0, 0};
  return {(m + k - 1) / k, m};
}

Rat binomial_extremal(int n) {
  if (n < 1) throw PreconditionError("binomial_extremal: n >= 1 required");
  boost::multiprecision::cpp_int num = 1, den = 1;
  int top = n - 1, k = (n - 1) / 2;
  for (int i = 1; i <= k; ++i) {
    num *= top - k + i;
    den *= i;
  }
  return Rat(num / den);
}

namespace {

// Tries to interpret C as a family instance under the identity labeling.
struct Recognition {
  std::string family;
  int exact_odim = -1;
  int lower = -1;  // bounds only (no exact value)
  int upper = -1;
  std::string reason;
};

std::vector<Recognition> recognize_identity(const Code& c) {
  std::vector<Recognition> out;
  int n = c.n - 1;  // families live on [n+1] (or [2n] for the two-covers)
  if (n >= 1) {
    try {
      if (make_S_n(n) == c)
        out.push_back({"sunflower-star-" + std::to_string(n), n, -1, -1,
                       "exact: star family needs dimension n"});
    } catch (const CapError&) {}
    // cone-plus-top family: recover Delta from the words through the apex
    Word apex = Word(1) << n;
    std::vector<Word> dw;
    for (Word w : c.words)
      if (w & apex) dw.push_back(w & ~apex);
    try {
      Code delta = code_from_words(n, dw);
      if (is_simplicial_complex(delta) && !delta.contains(full_word(n)) &&
          make_S_Delta(delta) == c) {
        int m = (int)facets(delta).size();
        if (m >= 2)
          out.push_back({"coned-complex-" + std::to_string(m) + "-facets", m,
                         -1, -1,
                         "exact: coned complex needs one dimension per "
                         "facet"});
      }
    } catch (const PreconditionError&) {}
    // quotient-by-minimal family: recover the base code
    std::vector<Word> base;
    for (Word w : c.words)
      if (!(w & apex) && w != full_word(n)) base.push_back(w);
    for (int with_full = 0; with_full < 2; ++with_full) {
      try {
        std::vector<Word> bw = base;
        if (with_full) bw.push_back(full_word(n));
        Code b = code_from_words(n, bw);
        if (make_S_C_over_min(b) != c) continue;
        bool all_singletons = true;
        for (int i = 0; i < n; ++i)
          all_singletons &= b.contains(Word(1) << i);
        if (!all_singletons) continue;
        int dd = complex_dim(b);
        int lb = (n + dd) / (dd + 1);  // ceil(n / (dim+1))
        out.push_back({"minimal-quotient", -1, lb, -1,
                       "lower: quotient over minimal codewords"});
        break;
      } catch (const PreconditionError&) {}
    }
  }
  if (c.n % 2 == 0 && c.n >= 2) {
    int tn = c.n / 2;
    if (make_T_n(tn) == c) {
      auto [lo, hi] = t_n_bounds(tn);
      Recognition r{"two-cover-" + std::to_string(tn), -1, -1, -1, ""};
      if (lo == hi) {
        r.exact_odim = lo;
        r.reason = "exact: two-cover table value";
      } else {
        r.lower = lo;
        r.upper = hi;
        r.reason = "two-cover growth bounds";
      }
      out.push_back(r);
    }
  }
  return out;
}

Code relabel(const Code& c, const std::vector<int>& perm) {
  std::vector<Word> words;
  for (Word w : c.words) {
    Word v = 0;
    for (int i = 0; i < c.n; ++i)
      if (w >> i & 1) v |= Word(1) << perm[i];
    words.push_back(v);
  }
  return code_from_words(c.n, std::move(words));
}

}  // namespace

BoundReport bound_report(const Code& c, bool permutation_search) {
  BoundReport r;
  r.n = c.n;
  r.intersection_complete = is_intersection_complete(c);
  auto maxw = maximal_codewords(c);
  r.max_codeword_count = (int)maxw.size();
  r.complex_dimension = complex_dim(c);
  bool trivial = c.words.size() == 1;  // just the empty word

  r.odim_lower = trivial ? 0 : 1;
  r.cdim_lower = trivial ? 0 : 1;
  if (trivial) {
    r.odim_upper = 0;
    r.cdim_upper = 0;
    r.exact_odim = 0;
    r.reasons.push_back("trivial code, dimension 0");
    return r;
  }

  // with m+1 maximal codewords the open and closed dimensions are at most
  // max(2, m)
  int m = r.max_codeword_count - 1;
  r.odim_upper = std::max(2, m);
  r.reasons.push_back("odim upper " + std::to_string(r.odim_upper) +
                      ": max-codeword count");
  int d = r.complex_dimension;
  r.cdim_upper = std::max(2, m);
  std::string cdim_reason = "max-codeword count";
  if (r.intersection_complete) {
    int geo = std::min(2 * d + 1, c.n - 1);
    if (geo < r.cdim_upper) {
      r.cdim_upper = geo;
      cdim_reason = "min(2d+1, n-1) for intersection complete codes";
    }
  }
  r.cdim_upper = std::max(r.cdim_upper, r.cdim_lower);
  r.reasons.push_back("cdim upper " + std::to_string(r.cdim_upper) + ": " +
                      cdim_reason);

  std::vector<Recognition> recs = recognize_identity(c);
  if (recs.empty() && permutation_search) {
    if (c.n > 8) throw CapError("bound_report: permutation search needs n <= 8");
    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      recs = recognize_identity(relabel(c, perm));
      if (!recs.empty()) break;
    }
  }
  for (const auto& rec : recs) {
    if (r.family == std::nullopt) r.family = rec.family;
    if (rec.exact_odim >= 0) {
      r.exact_odim = rec.exact_odim;
      r.odim_lower = rec.exact_odim;
      r.odim_upper = rec.exact_odim;
      r.reasons.push_back("odim " + std::to_string(rec.exact_odim) + ": " +
                          rec.reason);
      break;
    }
    if (rec.lower > r.odim_lower) {
      r.odim_lower = rec.lower;
      r.reasons.push_back("odim lower " + std::to_string(rec.lower) + ": " +
                          rec.reason);
    }
    if (rec.upper >= 0 && rec.upper < r.odim_upper) {
      r.odim_upper = rec.upper;
      r.reasons.push_back("odim upper " + std::to_string(rec.upper) + ": " +
                          rec.reason);
    }
  }
  return r;
}

}  // namespace ncode
