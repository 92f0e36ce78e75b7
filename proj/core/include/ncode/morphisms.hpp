#pragma once

#include <map>
#include <optional>

#include "ncode/code.hpp"

namespace ncode {

// A code morphism C -> image on [m], presented by m trunks of C: codeword c
// maps to { i : c in T_i }. Empty T_i are allowed (neuron i never fires).
struct TrunkMorphism {
  Code source;
  std::vector<std::vector<Word>> trunks;

  int target_n() const { return (int)trunks.size(); }
};

// Whether S (a set of codewords of C) is a trunk of C, i.e. S = Tk(sigma)
// for some sigma. The only candidate is the meet of S.
bool is_trunk(const Code& c, const std::vector<Word>& s);

// Validates every T_i as a trunk and returns (image code, word map).
std::pair<Code, std::map<Word, Word>> apply_morphism(const TrunkMorphism& m);

// Whether an explicit codeword map C -> D is a morphism: the preimage of
// every simple trunk Tk_D(i) must be a trunk of C.
bool is_morphism_map(const Code& c, const Code& d,
                     const std::map<Word, Word>& f);

// The restriction c -> c intersect sigma, with the surviving neurons
// relabeled 1..|sigma| in increasing order.
Code restriction(const Code& c, Word sigma);

// The canonical surjection from the coned-complex family onto the star
// family with one neuron per facet: trunks Tk(F_1)..Tk(F_m), Tk(n+1).
TrunkMorphism sdelta_to_sm(const Code& delta);

// The canonical surjection from make_S_C_over_D(c, d) onto a quotient-by-
// minimal family: trunks at F_i + {n+1} for the maximal codewords F_i of D,
// plus Tk(n+1). Returns the morphism and the quotient base code E.
std::pair<TrunkMorphism, Code> scd_to_semin(const Code& c, const Code& d);

// Bounded search for a presentation of D as an iterated image/restriction
// of C: at most `depth` steps, each either a restriction to a subset of
// neurons or a morphism by simple trunks. Returns true when found.
bool minor_search(const Code& c, const Code& d, int depth);

}  // namespace ncode
