#pragma once

// Exact dense linear solves over Q for the small systems that appear in
// weight and h-map computations (dimensions bounded by the lattice rank).

#include "zipstrata/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace zipstrata {

// Solve M x = rhs with M square (given by rows); throws on a singular system.
inline std::vector<Rat> solve_square(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular linear system");
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rat d = m[col][col];
    for (int j = col; j < n; ++j) m[col][j] /= d;
    rhs[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace zipstrata
