#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncode/rational.hpp"

namespace ncode {

// A codeword is a subset of [n] stored as a bitmask, bit i-1 for neuron i.
using Word = uint64_t;

constexpr int kMaxNeurons = 64;

inline int weight(Word w) { return __builtin_popcountll(w); }

inline Word full_word(int n) {
  return n == 64 ? ~Word(0) : ((Word(1) << n) - 1);
}

std::string word_str(Word w, int n);
Word word_from_indices(const std::vector<int>& idx, int n);
std::vector<int> word_indices(Word w);

// A combinatorial code on n neurons. Codewords are kept deduplicated in
// canonical order (weight, then mask value); the empty codeword is always
// present.
struct Code {
  int n = 0;
  std::vector<Word> words;

  bool contains(Word w) const;
  size_t size() const { return words.size(); }
  bool operator==(const Code&) const = default;
};

// Builds a code, validating 1 <= n <= 64 and word range; inserts the empty
// codeword.
Code code_from_words(int n, std::vector<Word> words);

std::vector<Word> maximal_codewords(const Code& c);

// Tk_C(sigma) = { c in C : sigma subset of c }.
std::vector<Word> trunk(const Code& c, Word sigma);

bool is_simplicial_complex(const Code& c);

// Delta(C): downward closure of the codewords.
Code simplicial_complex_of(const Code& c);

std::vector<Word> facets(const Code& complex);

// dim Delta(C) = max weight - 1; -1 for {emptyset}.
int complex_dim(const Code& c);

bool is_intersection_complete(const Code& c);

// Smallest intersection complete code containing C (pairwise-intersection
// fixpoint).
Code intersection_completion(const Code& c);

// Whether sigma lies in the intersection completion of C, decided by the
// trunk criterion: Tk(sigma) nonempty and Tk(sigma+i) proper for each
// i outside sigma. No completion is materialized.
bool completion_membership(const Code& c, Word sigma);

// Cone: adds a new neuron m to every codeword of the complex;
// pre: c is a simplicial complex, m = n+1.
Code cone(const Code& c, int m);

}  // namespace ncode
