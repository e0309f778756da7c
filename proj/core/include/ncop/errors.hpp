#pragma once

#include <stdexcept>
#include <string>

namespace ncop {

struct NcopError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cover/disjointness failure: not a partition of {0,...,n}
struct NotAPartition : NcopError {
  using NcopError::NcopError;
};

struct SingletonBlock : NcopError {
  int element;
  explicit SingletonBlock(int e)
      : NcopError("singleton block {" + std::to_string(e) + "}"), element(e) {}
};

// crossing witness a<b<c<d, a,c in one block and b,d in another
struct Crossing : NcopError {
  int a, b, c, d;
  Crossing(int a_, int b_, int c_, int d_)
      : NcopError("crossing witness (" + std::to_string(a_) + "," + std::to_string(b_) + "," +
                  std::to_string(c_) + "," + std::to_string(d_) + ")"),
        a(a_), b(b_), c(c_), d(d_) {}
};

struct IndexOutOfRange : NcopError {
  using NcopError::NcopError;
};

struct ArityMismatch : NcopError {
  using NcopError::NcopError;
};

struct SyntaxError : NcopError {
  std::size_t pos;
  SyntaxError(const std::string& what, std::size_t pos_)
      : NcopError(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct NoSuchBlock : NcopError {
  using NcopError::NcopError;
};

}  // namespace ncop
