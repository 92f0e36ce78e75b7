#include "ncode/morphisms.hpp"

#include <algorithm>
#include <set>

#include "ncode/families.hpp"

namespace ncode {

namespace {

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool is_trunk(const Code& c, const std::vector<Word>& s) {
  for (Word w : s)
    if (!c.contains(w))
      throw PreconditionError("is_trunk: S is not a subset of C");
  if (s.empty()) {
    // the empty set is a trunk iff some sigma has empty trunk, and the
    // best candidate is [n]
    return !c.contains(full_word(c.n));
  }
  Word meet = ~Word(0);
  for (Word w : s) meet &= w;
  meet &= full_word(c.n);
  return sorted(trunk(c, meet)) == sorted(s);
}

std::pair<Code, std::map<Word, Word>> apply_morphism(const TrunkMorphism& m) {
  int tn = m.target_n();
  if (tn < 1 || tn > kMaxNeurons)
    throw PreconditionError("apply_morphism: bad trunk count");
  std::vector<std::set<Word>> member(tn);
  for (int i = 0; i < tn; ++i) {
    if (!is_trunk(m.source, m.trunks[i]))
      throw PreconditionError("apply_morphism: T_" + std::to_string(i + 1) +
                              " is not a trunk");
    member[i] = std::set<Word>(m.trunks[i].begin(), m.trunks[i].end());
  }
  std::map<Word, Word> f;
  std::vector<Word> image;
  for (Word w : m.source.words) {
    Word v = 0;
    for (int i = 0; i < tn; ++i)
      if (member[i].count(w)) v |= Word(1) << i;
    f[w] = v;
    image.push_back(v);
  }
  return {code_from_words(tn, std::move(image)), std::move(f)};
}

bool is_morphism_map(const Code& c, const Code& d,
                     const std::map<Word, Word>& f) {
  for (Word w : c.words) {
    auto it = f.find(w);
    if (it == f.end())
      throw PreconditionError("is_morphism_map: map misses a codeword");
    if (!d.contains(it->second))
      throw PreconditionError("is_morphism_map: value outside D");
  }
  for (int i = 0; i < d.n; ++i) {
    Word bit = Word(1) << i;
    std::vector<Word> pre;
    for (Word w : c.words)
      if (f.at(w) & bit) pre.push_back(w);
    if (!is_trunk(c, pre)) return false;
  }
  return true;
}

Code restriction(const Code& c, Word sigma) {
  sigma &= full_word(c.n);
  int m = weight(sigma);
  if (m < 1) throw PreconditionError("restriction: empty neuron set");
  std::vector<int> pos;
  for (int i = 0; i < c.n; ++i)
    if (sigma >> i & 1) pos.push_back(i);
  std::vector<Word> words;
  for (Word w : c.words) {
    Word v = 0;
    for (int j = 0; j < m; ++j)
      if (w >> pos[j] & 1) v |= Word(1) << j;
    words.push_back(v);
  }
  return code_from_words(m, std::move(words));
}

TrunkMorphism sdelta_to_sm(const Code& delta) {
  Code s = make_S_Delta(delta);
  std::vector<Word> fs = facets(delta);
  TrunkMorphism m;
  m.source = s;
  for (Word f : fs) m.trunks.push_back(trunk(s, f));
  m.trunks.push_back(trunk(s, Word(1) << delta.n));
  return m;
}

std::pair<TrunkMorphism, Code> scd_to_semin(const Code& c, const Code& d) {
  Code s = make_S_C_over_D(c, d);
  std::vector<Word> fs = maximal_codewords(d);
  if (!fs.empty() && fs[0] == 0) fs.erase(fs.begin());
  int m = (int)fs.size();
  if (m < 2)
    throw PreconditionError("scd_to_semin: D needs at least two maximal "
                            "codewords");
  TrunkMorphism mor;
  mor.source = s;
  for (Word f : fs) mor.trunks.push_back(trunk(s, f));
  mor.trunks.push_back(trunk(s, Word(1) << c.n));
  // the quotient base: images of the plain codewords of C
  std::vector<Word> base;
  for (Word w : c.words) {
    Word v = 0;
    for (int i = 0; i < m; ++i)
      if ((w & fs[i]) == fs[i]) v |= Word(1) << i;
    base.push_back(v);
  }
  return {std::move(mor), code_from_words(m, std::move(base))};
}

namespace {

bool minor_step(const Code& c, const Code& d, int depth,
                std::set<std::pair<int, std::vector<Word>>>& seen);

bool reaches(const Code& c, const Code& d, int depth,
             std::set<std::pair<int, std::vector<Word>>>& seen) {
  if (c == d) return true;
  if (depth == 0) return false;
  auto key = std::make_pair(c.n, c.words);
  if (!seen.insert(key).second) return false;
  return minor_step(c, d, depth, seen);
}

bool minor_step(const Code& c, const Code& d, int depth,
                std::set<std::pair<int, std::vector<Word>>>& seen) {
  // restrictions to any proper neuron subset of size >= d.n
  Word full = full_word(c.n);
  for (Word sigma = 1; sigma <= full; ++sigma) {
    if (weight(sigma) < d.n || sigma == full) continue;
    if (reaches(restriction(c, sigma), d, depth - 1, seen)) return true;
  }
  // morphisms by simple trunks of a neuron subset
  if (c.n <= 16 && d.n < c.n) {
    std::vector<int> idx(c.n);
    for (Word sigma = 1; sigma < full; ++sigma) {
      if (weight(sigma) != d.n) continue;
      TrunkMorphism m;
      m.source = c;
      for (int i = 0; i < c.n; ++i)
        if (sigma >> i & 1) m.trunks.push_back(trunk(c, Word(1) << i));
      auto [img, f] = apply_morphism(m);
      if (reaches(img, d, depth - 1, seen)) return true;
    }
  }
  return false;
}

}  // namespace

bool minor_search(const Code& c, const Code& d, int depth) {
  if (depth > 3) throw CapError("minor_search: depth capped at 3");
  if (c.n > 16) throw CapError("minor_search: n capped at 16");
  std::set<std::pair<int, std::vector<Word>>> seen;
  return reaches(c, d, depth, seen);
}

}  // namespace ncode
