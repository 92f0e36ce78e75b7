#include "ncode/families.hpp"

namespace ncode {

Code make_S_n(int n) {
  if (n < 1) throw PreconditionError("make_S_n: n >= 1 required");
  if (n + 1 > kMaxNeurons) throw CapError("make_S_n: more than 64 neurons");
  std::vector<Word> words;
  words.push_back(full_word(n));
  Word last = Word(1) << n;
  for (int i = 0; i <= n; ++i) words.push_back(Word(1) << i);
  for (int i = 0; i < n; ++i) words.push_back((Word(1) << i) | last);
  return code_from_words(n + 1, std::move(words));
}

Code make_S_Delta(const Code& delta) {
  if (!is_simplicial_complex(delta))
    throw PreconditionError("make_S_Delta: input is not a simplicial complex");
  if (delta.contains(full_word(delta.n)))
    throw PreconditionError("make_S_Delta: complex must be proper on [n]");
  Code coned = cone(delta, delta.n + 1);
  std::vector<Word> words = coned.words;
  words.push_back(full_word(delta.n));
  return code_from_words(delta.n + 1, std::move(words));
}

Code make_T_n(int n) {
  if (n < 1) throw PreconditionError("make_T_n: n >= 1 required");
  if (2 * n > kMaxNeurons) throw CapError("make_T_n: more than 64 neurons");
  std::vector<Word> words;
  Word odd = 0, even = 0;
  for (int k = 0; k < n; ++k) {
    Word pair = Word(3) << (2 * k);
    words.push_back(pair);
    odd |= Word(1) << (2 * k);
    even |= Word(1) << (2 * k + 1);
  }
  words.push_back(odd);
  words.push_back(even);
  for (int i = 0; i < 2 * n; ++i) words.push_back(Word(1) << i);
  return code_from_words(2 * n, std::move(words));
}

std::vector<Word> minimal_nonempty(const Code& c) {
  std::vector<Word> out;
  for (Word w : c.words) {
    if (w == 0) continue;
    bool minimal = true;
    for (Word v : c.words)
      if (v != 0 && v != w && (v & w) == v) { minimal = false; break; }
    if (minimal) out.push_back(w);
  }
  return out;
}

Code make_S_C_over_D(const Code& c, const Code& d) {
  if (d.n != c.n)
    throw PreconditionError("make_S_C_over_D: C and D live on different [n]");
  if (c.n + 1 > kMaxNeurons)
    throw CapError("make_S_C_over_D: more than 64 neurons");
  for (Word w : d.words)
    if (!c.contains(w))
      throw PreconditionError("make_S_C_over_D: D is not a subcode of C");
  if (!is_intersection_complete(c))
    throw PreconditionError("make_S_C_over_D: C not intersection complete");
  if (!is_intersection_complete(d))
    throw PreconditionError("make_S_C_over_D: D not intersection complete");
  Word fresh = Word(1) << c.n;
  std::vector<Word> words = c.words;
  words.push_back(full_word(c.n));
  for (Word w : d.words) words.push_back(w | fresh);
  return code_from_words(c.n + 1, std::move(words));
}

Code make_S_C_over_min(const Code& c) {
  Code d = code_from_words(c.n, minimal_nonempty(c));
  return make_S_C_over_D(c, d);
}

}  // namespace ncode
