#pragma once

// Small dense integer matrix acting on lattice coordinates. Weyl elements and
// the Galois automorphism are unimodular, so inverses stay integral; we compute
// them by exact rational elimination and convert back.

#include "zipstrata/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace zipstrata {

struct IntMat {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major, n*n

  IntMat() = default;
  explicit IntMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  static IntMat identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMat mul(const IntMat& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        std::int64_t v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  IntMat transpose() const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
    std::vector<std::int64_t> r(n, 0);
    for (int i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
    std::vector<Rat> r(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      Rat s = 0;
      for (int j = 0; j < n; ++j)
        if (at(i, j) != 0) s += Rat(static_cast<long>(at(i, j))) * v[j];
      r[i] = s;
    }
    return r;
  }

  // Exact inverse; throws if the matrix is singular or the inverse is not integral.
  IntMat inverse() const;
};

inline IntMat IntMat::inverse() const {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(at(i, j)));
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(m[i][n + j])) throw std::domain_error("non-integral inverse");
      inv.at(i, j) = to_long(m[i][n + j]);
    }
  return inv;
}

struct IntVecHash {
  size_t operator()(const std::vector<std::int64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace zipstrata
