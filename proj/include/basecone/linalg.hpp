// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer linear algebra at desk scale: rank by fraction-free
// elimination, determinants by Bareiss, lattices by row-style Hermite
// normal form. No floating point.

#ifndef BASECONE_LINALG_HPP
#define BASECONE_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "basecone/vec.hpp"

namespace basecone {

using Mat = std::vector<Vec>;

// Rank over Q of an integer matrix, fraction-free with per-row gcd reduction.
inline std::size_t rank_of(Mat rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t j = r + 1; j < rows.size(); ++j) {
      if (rows[j][c] == 0) continue;
      rows[j] = combine(rows[r][c], rows[j], rows[j][c], rows[r]);
      Int g = entries_gcd(rows[j]);
      if (g > 1)
        for (Int& x : rows[j]) x /= g;
    }
    ++r;
  }
  return r;
}

// Bareiss fraction-free determinant of a square matrix.
inline Int det_bareiss(Mat a) {
  const std::size_t n = a.size();
  for (const Vec& row : a)
    if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Reduced row Hermite normal form: echelon rows with positive pivots and
// entries above each pivot reduced into [0, pivot). Canonical per lattice,
// so two generating sets span the same lattice iff their forms agree.
struct Hnf {
  std::size_t dim = 0;
  Mat rows;                        // echelon basis of the row lattice
  std::vector<std::size_t> pivots; // pivot column of each row

  bool full_rank() const { return rows.size() == dim; }

  // Lattice index in Z^dim (product of pivots); only meaningful at full rank.
  Int index() const {
    if (!full_rank()) return 0;
    Int p = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) p *= rows[r][pivots[r]];
    return p;
  }

  bool contains(const Vec& x) const {
    if (x.size() != dim) throw std::invalid_argument("Hnf::contains: dimension mismatch");
    Vec v = x;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t c = pivots[r];
      if (v[c] % rows[r][c] != 0) return false;
      Int q = v[c] / rows[r][c];
      if (q != 0) v = sub(v, scaled(rows[r], q));
    }
    return is_zero(v);
  }

  bool operator==(const Hnf& other) const {
    return dim == other.dim && rows == other.rows && pivots == other.pivots;
  }
};

inline Hnf hnf_of(Mat rows, std::size_t dim) {
  for (const Vec& row : rows)
    if (row.size() != dim) throw std::invalid_argument("hnf_of: row dimension mismatch");
  Hnf h;
  h.dim = dim;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    // Euclid on the column entries at or below r until one nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t j = r; j < rows.size(); ++j) {
        if (rows[j][c] == 0) continue;
        if (best == rows.size() ||
            boost::multiprecision::abs(rows[j][c]) < boost::multiprecision::abs(rows[best][c]))
          best = j;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced_all = true;
      for (std::size_t j = r + 1; j < rows.size(); ++j) {
        if (rows[j][c] == 0) continue;
        Int q = rows[j][c] / rows[r][c];
        if (q != 0) rows[j] = sub(rows[j], scaled(rows[r], q));
        if (rows[j][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0) rows[r] = scaled(rows[r], -1);
      h.pivots.push_back(c);
      ++r;
    }
  }
  rows.resize(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const std::size_t c = h.pivots[j];
      Int q = rows[i][c] / rows[j][c];
      if (rows[i][c] - q * rows[j][c] < 0) q -= 1;  // floor division
      if (q != 0) rows[i] = sub(rows[i], scaled(rows[j], q));
    }
  }
  h.rows = std::move(rows);
  return h;
}

// Integer basis of the orthogonal complement of the row span (kernel of the
// transpose action), primitive rows in canonical order.
inline Mat integer_orthogonal_complement(const Mat& rows, std::size_t dim) {
  // Kernel via HNF of [A^T | I]: rows of the identity block whose A^T part
  // vanished span the integer kernel of x -> rows * x.
  Mat work;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < dim; ++c) {
    Vec row(m + dim, 0);
    for (std::size_t j = 0; j < m; ++j) row[j] = rows[j][c];
    row[m + c] = 1;
    work.push_back(std::move(row));
  }
  Hnf h = hnf_of(std::move(work), m + dim);
  Mat kernel;
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    bool zero_head = true;
    for (std::size_t j = 0; j < m && zero_head; ++j)
      if (h.rows[r][j] != 0) zero_head = false;
    if (!zero_head) continue;
    Vec v(h.rows[r].begin() + static_cast<long>(m), h.rows[r].end());
    kernel.push_back(primitive(v));
  }
  std::sort(kernel.begin(), kernel.end(), lex_less);
  return kernel;
}

}  // namespace basecone

#endif  // BASECONE_LINALG_HPP
