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

// Lattice and dilation layer: the lattice generated by the base exponents,
// brute-force lattice point counts of the dilated polytope, and the closed
// form they must agree with.

#ifndef BASECONE_EHRHART_HPP
#define BASECONE_EHRHART_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "basecone/linalg.hpp"
#include "basecone/presentation.hpp"
#include "basecone/vec.hpp"

namespace basecone {

// C(a, b) exactly; zero when b > a.
inline Int binom(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("binom: arguments must be nonnegative");
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;  // exact: r is a binomial prefix
  }
  return r;
}

// The lattice generated by a set of integer vectors, held in canonical
// Hermite form. For the family this comes out as {x : n divides sum(x)},
// which callers assert rather than assume.
struct LatticeDescription {
  std::size_t dim = 0;
  Hnf hnf;

  bool contains(const Vec& x) const { return hnf.contains(x); }
  bool full_rank() const { return hnf.full_rank(); }
  Int index() const { return hnf.index(); }

  // Exact test against {x in Z^dim : modulus | sum(x)}.
  bool is_sum_divisibility_lattice(long long modulus) const {
    Mat gens;
    const std::size_t n = dim;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Vec v(n, 0);
      v[k] = 1;
      v[k + 1] = -1;
      gens.push_back(std::move(v));
    }
    Vec last(n, 0);
    last[n - 1] = modulus;
    gens.push_back(std::move(last));
    return hnf == hnf_of(std::move(gens), n);
  }
};

inline LatticeDescription lattice_of(const BaseSet& b) {
  if (b.size() == 0) throw std::invalid_argument("lattice_of: empty base set");
  LatticeDescription out;
  out.dim = static_cast<std::size_t>(b.n());
  out.hnf = hnf_of(Mat(b.elements().begin(), b.elements().end()), out.dim);
  return out;
}

// H-description of the t-th dilation of P = conv(A): nonnegative
// coordinates, block sum at most (i+1)t, total coordinate sum n*t.
struct DilatedPolytope {
  Presentation p;
  long long t = 0;
  std::vector<int> block;   // 1-based block coordinates
  Int block_bound = 0;      // (i+1) * t
  Int total = 0;            // n * t

  bool contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != p.n)
      throw std::invalid_argument("DilatedPolytope::contains: dimension mismatch");
    Int s = 0, bs = 0;
    for (const Int& c : x) {
      if (c < 0) return false;
      s += c;
    }
    for (int b : block) bs += x[static_cast<std::size_t>(b - 1)];
    return s == total && bs <= block_bound;
  }
};

inline DilatedPolytope dilate(const Presentation& p, long long t) {
  if (t < 0) throw std::invalid_argument("dilate: dilation factor must be >= 0");
  DilatedPolytope d;
  d.p = p;
  d.t = t;
  d.block = p.block();
  d.block_bound = Int(p.i + 1) * t;
  d.total = Int(p.n) * t;
  return d;
}

inline void check_composition_guard(long long total, int parts, const Int& guard) {
  if (binom(total + parts - 1, parts - 1) > guard)
    throw ResourceLimitError("composition enumeration exceeds the configured guard");
}

constexpr long long kDefaultCompositionGuard = 100000000;  // 1e8

// Lattice points of the dilated polytope in canonical (lexicographic) order,
// by direct enumeration of compositions filtered through the lattice.
inline std::vector<Vec> list_points_bruteforce(const Presentation& p, long long t,
                                               const LatticeDescription& lattice,
                                               Int guard = kDefaultCompositionGuard) {
  DilatedPolytope d = dilate(p, t);
  check_composition_guard(p.n * t, p.n, guard);
  std::vector<Vec> pts;
  std::vector<std::size_t> block0;
  for (int b : d.block) block0.push_back(static_cast<std::size_t>(b - 1));
  for_each_composition(p.n * t, static_cast<std::size_t>(p.n),
                       [&](const std::vector<long long>& alpha) {
                         long long bs = 0;
                         for (std::size_t b : block0) bs += alpha[b];
                         if (bs > d.block_bound) return;
                         Vec v = to_vec(alpha);
                         if (lattice.contains(v)) pts.push_back(std::move(v));
                       });
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

// Exact count of lattice points of ZA in the t-th dilation.
inline Int count_points_bruteforce(const Presentation& p, long long t,
                                   const LatticeDescription& lattice,
                                   Int guard = kDefaultCompositionGuard) {
  DilatedPolytope d = dilate(p, t);
  check_composition_guard(p.n * t, p.n, guard);
  Int count = 0;
  std::vector<std::size_t> block0;
  for (int b : d.block) block0.push_back(static_cast<std::size_t>(b - 1));
  for_each_composition(p.n * t, static_cast<std::size_t>(p.n),
                       [&](const std::vector<long long>& alpha) {
                         long long bs = 0;
                         for (std::size_t b : block0) bs += alpha[b];
                         if (bs > d.block_bound) return;
                         if (lattice.contains(to_vec(alpha))) ++count;
                       });
  return count;
}

// Convenience overload computing the lattice from the base set.
inline Int count_points_bruteforce(const Presentation& p, long long t,
                                   Int guard = kDefaultCompositionGuard) {
  return count_points_bruteforce(p, t, lattice_of(enumerate_base(p)), guard);
}

// Closed-form value of the Hilbert/Ehrhart function:
//   h(t) = sum_{k=0}^{(i+1)t} C(k+i-1, k) C(nt-k+n-i-1, nt-k).
inline Int hilbert_closed_form(int n, int i, long long t) {
  if (n < 3 || i < 1 || i > n - 2)
    throw std::invalid_argument("hilbert_closed_form: parameters out of range");
  if (t < 0) throw std::invalid_argument("hilbert_closed_form: t must be >= 0");
  Int sum = 0;
  const long long upper = static_cast<long long>(i + 1) * t;
  for (long long k = 0; k <= upper; ++k)
    sum += binom(k + i - 1, k) * binom(n * t - k + n - i - 1, n * t - k);
  return sum;
}

}  // namespace basecone

#endif  // BASECONE_EHRHART_HPP
