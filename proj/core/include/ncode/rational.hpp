#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncode {

using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Raised when an operation's input contract is violated (CLI exit code 2).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a documented size cap (CLI exit code 3).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat parse_rat(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw PreconditionError("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat l1_norm(const RatVec& a) {
  Rat s = 0;
  for (const Rat& x : a) s += x < 0 ? Rat(-x) : x;
  return s;
}

}  // namespace ncode
