#include "ncode/code.hpp"

#include <algorithm>

namespace ncode {

std::string word_str(Word w, int n) {
  std::string s;
  for (int i = 0; i < n; ++i)
    if (w >> i & 1) {
      if (!s.empty()) s += ' ';
      s += std::to_string(i + 1);
    }
  return s.empty() ? "{}" : s;
}

Word word_from_indices(const std::vector<int>& idx, int n) {
  Word w = 0;
  for (int i : idx) {
    if (i < 1 || i > n)
      throw PreconditionError("neuron index out of range: " +
                              std::to_string(i));
    w |= Word(1) << (i - 1);
  }
  return w;
}

std::vector<int> word_indices(Word w) {
  std::vector<int> idx;
  for (int i = 0; i < kMaxNeurons; ++i)
    if (w >> i & 1) idx.push_back(i + 1);
  return idx;
}

namespace {

bool canonical_less(Word a, Word b) {
  int wa = weight(a), wb = weight(b);
  return wa != wb ? wa < wb : a < b;
}

void canonicalize(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), canonical_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

bool Code::contains(Word w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w, canonical_less);
  return it != words.end() && *it == w;
}

Code code_from_words(int n, std::vector<Word> words) {
  if (n < 1 || n > kMaxNeurons)
    throw PreconditionError("code_from_words: n out of range");
  Word full = full_word(n);
  for (Word w : words)
    if (w & ~full)
      throw PreconditionError("code_from_words: codeword outside [n]");
  words.push_back(0);
  canonicalize(words);
  return Code{n, std::move(words)};
}

std::vector<Word> maximal_codewords(const Code& c) {
  std::vector<Word> out;
  for (Word w : c.words) {
    bool maximal = true;
    for (Word v : c.words)
      if (v != w && (w & v) == w) { maximal = false; break; }
    if (maximal) out.push_back(w);
  }
  return out;
}

std::vector<Word> trunk(const Code& c, Word sigma) {
  std::vector<Word> out;
  for (Word w : c.words)
    if ((w & sigma) == sigma) out.push_back(w);
  return out;
}

bool is_simplicial_complex(const Code& c) {
  for (Word w : c.words) {
    // enumerate proper subsets
    for (Word s = (w - 1) & w; s != w; s = (s - 1) & w) {
      if (!c.contains(s)) return false;
      if (s == 0) break;
    }
  }
  return true;
}

Code simplicial_complex_of(const Code& c) {
  std::vector<Word> out;
  for (Word w : c.words) {
    out.push_back(w);
    for (Word s = (w - 1) & w; s != w; s = (s - 1) & w) {
      out.push_back(s);
      if (s == 0) break;
    }
  }
  canonicalize(out);
  return Code{c.n, std::move(out)};
}

std::vector<Word> facets(const Code& complex) {
  return maximal_codewords(complex);
}

int complex_dim(const Code& c) {
  int d = -1;
  for (Word w : c.words) d = std::max(d, weight(w) - 1);
  return d;
}

bool is_intersection_complete(const Code& c) {
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j)
      if (!c.contains(c.words[i] & c.words[j])) return false;
  return true;
}

Code intersection_completion(const Code& c) {
  std::vector<Word> cur = c.words;
  for (;;) {
    std::vector<Word> next = cur;
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        next.push_back(cur[i] & cur[j]);
    canonicalize(next);
    if (next == cur) break;
    cur = std::move(next);
  }
  return Code{c.n, std::move(cur)};
}

bool completion_membership(const Code& c, Word sigma) {
  if (sigma & ~full_word(c.n)) return false;
  Word meet = ~Word(0);
  bool nonempty = false;
  for (Word w : c.words)
    if ((w & sigma) == sigma) { meet &= w; nonempty = true; }
  if (!nonempty) return false;
  // Tk(sigma + i) is proper in Tk(sigma) iff i misses the trunk's meet.
  for (int i = 0; i < c.n; ++i) {
    Word bit = Word(1) << i;
    if ((sigma & bit) == 0 && (meet & bit)) return false;
  }
  return true;
}

Code cone(const Code& c, int m) {
  if (m != c.n + 1)
    throw PreconditionError("cone: apex must be the next fresh neuron");
  if (m > kMaxNeurons) throw CapError("cone: more than 64 neurons");
  if (!is_simplicial_complex(c))
    throw PreconditionError("cone: input is not a simplicial complex");
  Word apex = Word(1) << (m - 1);
  std::vector<Word> out;
  for (Word w : c.words) {
    out.push_back(w);
    out.push_back(w | apex);
  }
  canonicalize(out);
  return Code{m, std::move(out)};
}

}  // namespace ncode
