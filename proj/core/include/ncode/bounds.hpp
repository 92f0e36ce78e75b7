#pragma once

#include <optional>
#include <string>

#include "ncode/code.hpp"

namespace ncode {

// Lower/upper interval for a dimension invariant, with one reason string
// per contributing bound.
struct BoundReport {
  int n = 0;
  bool intersection_complete = false;
  int max_codeword_count = 0;  // number of maximal codewords (m + 1)
  int complex_dimension = -1;  // dim of the downward closure
  int odim_lower = 0;
  int odim_upper = 0;
  int cdim_lower = 0;
  int cdim_upper = 0;
  std::optional<int> exact_odim;
  std::optional<std::string> family;  // recognized family tag, if any
  std::vector<std::string> reasons;
};

// Assembles the bound interval for open and closed embedding dimensions.
// With permutation_search, recognition also tries all relabelings of
// the neurons (n <= 8 only).
BoundReport bound_report(const Code& c, bool permutation_search = false);

// (lower, upper) for the minimal open embedding dimension of the n-th
// two-cover family; exact for n <= 5.
std::pair<int, int> t_n_bounds(int n);

// Largest number of maximal codewords of D whose union lies in Delta(C).
// Cap: at most 20 maximal codewords in D.
int compute_k(const Code& c, const Code& d);

// Bounds m >= odim >= ceil(m/k) for make_S_C_over_D(c, d), where m is the
// number of maximal codewords of D.
std::pair<int, int> scd_bounds(const Code& c, const Code& d);

// Extremal maximal-codeword count at parameter n:
// binomial(n-1, floor((n-1)/2)).
Rat binomial_extremal(int n);

}  // namespace ncode
