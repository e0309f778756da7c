#include "ncop/matrix.hpp"

#include <cassert>
#include <cstdlib>

namespace ncop {

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t rank = 0;
  Int prev = 1;
  while (rank < rows && rank < cols) {
    // full pivot search keeps the elimination valid on singular blocks
    std::size_t pr = rank, pc = rank;
    bool found = false;
    for (std::size_t r = rank; r < rows && !found; ++r)
      for (std::size_t c = rank; c < cols && !found; ++c)
        if (m.at(r, c) != 0) {
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    if (pr != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(pr, c), m.at(rank, c));
    if (pc != rank)
      for (std::size_t r = 0; r < rows; ++r) std::swap(m.at(r, pc), m.at(r, rank));
    const Int pivot = m.at(rank, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = rank + 1; c < cols; ++c) {
        Int num = pivot * m.at(r, c) - m.at(r, rank) * m.at(rank, c);
        // Bareiss: the previous pivot divides exactly
        Int q = num / prev;
        assert(q * prev == num);
        m.at(r, c) = q;
      }
      m.at(r, rank) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const Rat inv = m.at(row, col);
    for (std::size_t c = col; c < cols; ++c) m.at(row, c) /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Rat f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ncop
