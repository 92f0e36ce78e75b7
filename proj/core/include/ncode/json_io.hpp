#pragma once
#include <string>

#include "ncode/bounds.hpp"
#include "ncode/code.hpp"
#include "ncode/geometry.hpp"
#include "ncode/morphisms.hpp"
#include "ncode/realize.hpp"
#include "ncode/sunflower.hpp"

namespace ncode {

// Codes: {"n": int, "codewords": [[1-indexed neuron ints], ...]} in canonical
// order (the empty codeword appears as []).
std::string code_to_json(const Code& c);
Code code_from_json(const std::string& text);

// Rationals are serialized as strings "p/q" (or "p" when integral).
// Points: {"dim": int, "points": [["1/2","3"], ...]}.
std::string points_to_json(const std::vector<RatVec>& pts, int dim);
std::vector<RatVec> points_from_json(const std::string& text, int* dim = nullptr);

// Realizations: {"dim": int, "topology": "open"|"closed", "sets": [set, ...]}
// where a set is {"kind":"H","ineqs":[{"a":[rat,...],"b":rat},...]},
// {"kind":"V","points":[[rat,...],...]} or {"kind":"empty"}.
std::string realization_to_json(const Realization& r);
Realization realization_from_json(const std::string& text);

// Trunk morphisms: {"source": code, "trunks": [[ints], ...]} where each
// trunk lists 0-based indices into the source's canonical codeword order.
std::string morphism_to_json(const TrunkMorphism& f);
TrunkMorphism morphism_from_json(const std::string& text);

std::string bound_report_to_json(const BoundReport& r);
std::string plan_to_json(const RealizePlan& p);
RealizePlan plan_from_json(const std::string& text);
std::string sunflower_to_json(const Sunflower& s);
std::string verify_report_to_json(const VerifyReport& r);

}  // namespace ncode
