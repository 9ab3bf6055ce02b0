#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Error kinds surfaced through the C API as integer codes.
enum class Errc : int {
  kOk = 0,
  kInvalidInput = 1,
  kNonSymmetricAdjacency = 2,
  kEulerViolation = 3,
  kLoopEdge = 4,
  kMultiEdge = 5,
  kNotThreeConnected = 6,
  kSpecialsNotOnOuterFace = 7,
  kBadParameters = 8,
  kUnknownFace = 9,
  kNoCanonicalDefined = 10,
  kInfeasible = 11,
  kCycleNotDirected = 12,
  kCapExceeded = 13,
  kLatticeViolation = 14,
  kNoColoring = 15,
  kMultipleColorings = 16,
  kNotInnerTriangulation = 17,
  kStalled = 18,
  kAxiomViolation = 19,
  kNotGridLike = 20,
  kSizeExceeded = 21,
  kDisconnected = 22,
  kNotPrimitive = 23,
  kNoConvergence = 24,
  kUnknownSuite = 25,
  kParse = 26,
  kInternal = 99,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace oc
