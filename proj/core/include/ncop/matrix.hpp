#pragma once

#include "ncop/numbers.hpp"

#include <cstddef>
#include <vector>

namespace ncop {

template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// exact rank by fraction-free (division-preserving) elimination with full
// pivoting; the input is taken by value and destroyed
std::size_t bareiss_rank(IntMatrix m);

// basis of { x : m x = 0 } from the reduced row echelon form; one vector per
// free column, each with a 1 in its free position
std::vector<std::vector<Rat>> nullspace(RatMatrix m);

}  // namespace ncop
