#pragma once

#include "ncode/code.hpp"

namespace ncode {

// Code on [n+1]: the full word [n], all singletons of [n+1], all pairs
// {i, n+1} for i in [n], and the empty word.
Code make_S_n(int n);

// Code on [n+1] for a simplicial complex Delta on [n] with Delta a proper
// subset of 2^[n]: the cone of Delta over n+1, plus the full word [n].
Code make_S_Delta(const Code& delta);

// Code on [2n]: pairs {2k-1, 2k}, the all-odd and all-even words, all
// singletons, and the empty word.
Code make_T_n(int n);

// Code on [n+1] built from an intersection complete code C on [n] and an
// intersection complete subcode D: C itself, the full word [n], and
// d + {n+1} for every d in D.
Code make_S_C_over_D(const Code& c, const Code& d);

// make_S_C_over_D with D = the minimal nonempty codewords of C plus the
// empty word.
Code make_S_C_over_min(const Code& c);

// Minimal nonempty codewords of C.
std::vector<Word> minimal_nonempty(const Code& c);

}  // namespace ncode
