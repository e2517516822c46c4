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

// Predicted facet normals and extremal rays of the family cone R+A: one
// block facet attached to the shifted index block plus n coordinate facets,
// and (i+1)(n-i) extremal rays. The generic oracle that recomputes both from
// the generators lives in dd.hpp.

#ifndef BASECONE_CONE_HPP
#define BASECONE_CONE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "basecone/linalg.hpp"
#include "basecone/presentation.hpp"
#include "basecone/vec.hpp"

namespace basecone {

// Inward halfspace {x : <x, normal> >= 0}. The primitive form divides out
// the entry gcd; both are kept because facet identities compare primitives
// while the family's published normals are not primitive.
struct Halfspace {
  Vec normal;
  Vec primitive_normal;

  explicit Halfspace(Vec a) : normal(std::move(a)) {
    if (is_zero(normal)) throw std::invalid_argument("Halfspace: zero normal");
    primitive_normal = primitive(normal);
  }

  bool operator==(const Halfspace& o) const { return normal == o.normal; }
};

enum class FacetKind { Block, Coordinate };

// The normal attached to the size-i index block shifted k times: entries
// -(n-i-1) on block coordinates, i+1 elsewhere. For i = n-1 the block entry
// vanishes and the vector degenerates to n times a coordinate vector.
struct BlockNormal {
  int n = 0;
  int i = 0;
  int k = 0;
  FacetKind kind = FacetKind::Block;
  Halfspace halfspace;
};

inline BlockNormal block_normal(int n, int i, int k) {
  if (n < 3) throw std::invalid_argument("block_normal: n must satisfy n >= 3");
  if (i < 1 || i > n - 1) throw std::invalid_argument("block_normal: i must satisfy 1 <= i <= n-1");
  if (k < 0 || k > n - 1) throw std::invalid_argument("block_normal: k must satisfy 0 <= k <= n-1");
  Vec a(static_cast<std::size_t>(n), Int(i + 1));
  for (int m = 1; m <= i; ++m) a[static_cast<std::size_t>(cycle_apply(n, k, m) - 1)] = -(n - i - 1);
  FacetKind kind = (i == n - 1) ? FacetKind::Coordinate : FacetKind::Block;
  return BlockNormal{n, i, k, kind, Halfspace(std::move(a))};
}

// H-description of R+A: the block facet for the presentation's shift, then
// the n coordinate facets for k = 0..n-1.
inline std::vector<Halfspace> predicted_facets(const Presentation& p) {
  std::vector<Halfspace> out;
  out.reserve(static_cast<std::size_t>(p.n) + 1);
  out.push_back(block_normal(p.n, p.i, p.shift).halfspace);
  for (int k = 0; k <= p.n - 1; ++k) out.push_back(block_normal(p.n, p.n - 1, k).halfspace);
  return out;
}

// V-description: n*e_k for k outside the block and (i+1)e_j + (n-i-1)e_k for
// j in the block, k outside; every ray has coordinate sum n. Returned in
// lexicographic order.
inline std::vector<Vec> predicted_extremal_rays(const Presentation& p) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  std::vector<Vec> rays;
  for (int k = p.i + 1; k <= p.n; ++k) {
    Vec r(n, 0);
    r[static_cast<std::size_t>(k - 1)] = p.n;
    rays.push_back(apply_cycle_shift(r, p.shift));
  }
  for (int j = 1; j <= p.i; ++j) {
    for (int k = p.i + 1; k <= p.n; ++k) {
      Vec r(n, 0);
      r[static_cast<std::size_t>(j - 1)] = p.i + 1;
      r[static_cast<std::size_t>(k - 1)] = p.n - p.i - 1;
      rays.push_back(apply_cycle_shift(r, p.shift));
    }
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

// Exact determinant of the distinguished generator matrix, checked against
// the closed form n (i+1)^i (n-i-1)^(n-i-1). Stated for the unshifted
// layout; a shift permutes columns and leaves the magnitude unchanged.
inline Int det_certificate(const Presentation& p) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  Mat c;
  for (int k = 1; k <= p.i; ++k) {
    Vec row(n, 0);
    row[static_cast<std::size_t>(k - 1)] = p.i + 1;
    row[static_cast<std::size_t>(p.i)] += p.n - p.i - 1;
    c.push_back(std::move(row));
  }
  for (int k = p.i + 2; k <= p.n; ++k) {
    Vec row(n, 0);
    row[0] = p.i + 1;
    row[static_cast<std::size_t>(k - 1)] += p.n - p.i - 1;
    c.push_back(std::move(row));
  }
  Vec last(n, 0);
  last[n - 1] = p.n;
  c.push_back(std::move(last));

  Int det = boost::multiprecision::abs(det_bareiss(c));
  Int expected = p.n;
  for (int k = 0; k < p.i; ++k) expected *= p.i + 1;
  for (int k = 0; k < p.n - p.i - 1; ++k) expected *= p.n - p.i - 1;
  if (det != expected)
    throw std::logic_error("det_certificate: determinant disagrees with the closed form");
  return det;
}

// Paired descriptions of a cone as produced by the oracle. `equations` is
// empty for full-dimensional cones; extremal rays are primitive and sorted.
struct ConeDescription {
  std::size_t dim = 0;
  std::vector<Vec> generators;
  std::vector<Halfspace> halfspaces;
  std::vector<Vec> equations;
  std::vector<Vec> extremal_rays;
  bool full_dimensional = false;
  bool pointed = false;
  bool irreducible = false;
};

enum class Region { Interior, Boundary, Outside };

struct Membership {
  Region region = Region::Outside;
  std::vector<std::size_t> facets;  // tight facets (Boundary) or violated ones (Outside)
};

// Relative-interior test: interior iff every facet inequality is strict.
inline Membership membership(const Vec& x, const ConeDescription& c) {
  if (x.size() != c.dim) throw std::invalid_argument("membership: dimension mismatch");
  for (const Vec& eq : c.equations)
    if (dot(x, eq) != 0) return Membership{Region::Outside, {}};
  std::vector<std::size_t> tight, violated;
  for (std::size_t f = 0; f < c.halfspaces.size(); ++f) {
    Int v = dot(x, c.halfspaces[f].normal);
    if (v < 0)
      violated.push_back(f);
    else if (v == 0)
      tight.push_back(f);
  }
  if (!violated.empty()) return Membership{Region::Outside, violated};
  if (!tight.empty()) return Membership{Region::Boundary, tight};
  return Membership{Region::Interior, {}};
}

}  // namespace basecone

#endif  // BASECONE_CONE_HPP
