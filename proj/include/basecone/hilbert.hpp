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

// Hilbert series assembly: n-fold finite differences of the Hilbert function
// give the numerator over (1-T)^n; the a-invariant is the degree of the
// series as a rational function.

#ifndef BASECONE_HILBERT_HPP
#define BASECONE_HILBERT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "basecone/ehrhart.hpp"
#include "basecone/presentation.hpp"
#include "basecone/vec.hpp"

namespace basecone {

// k-th finite difference by the closed form
//   D^k(h)_j = sum_{s=0}^{k} (-1)^s h(j-s) C(k, s),
// with h(j) = 0 for j < 0. No boundary special case: the zero extension
// already yields D^k(h)_0 = h(0).
inline std::vector<Int> difference_transform(const std::vector<Int>& values, int k) {
  if (k < 0) throw std::invalid_argument("difference_transform: order must be >= 0");
  std::vector<Int> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    Int acc = 0;
    for (long long s = 0; s <= k && s <= static_cast<long long>(j); ++s) {
      Int term = values[j - static_cast<std::size_t>(s)] * binom(k, s);
      acc += (s % 2 == 0) ? term : -term;
    }
    out[j] = acc;
  }
  return out;
}

// Same transform by k-fold application of D(h)_j = h(j) - h(j-1); kept as
// the second route for the equality check.
inline std::vector<Int> difference_transform_iterated(const std::vector<Int>& values, int k) {
  if (k < 0) throw std::invalid_argument("difference_transform: order must be >= 0");
  std::vector<Int> cur = values;
  for (int step = 0; step < k; ++step) {
    std::vector<Int> next(cur.size());
    for (std::size_t j = 0; j < cur.size(); ++j)
      next[j] = cur[j] - (j > 0 ? cur[j - 1] : Int(0));
    cur = std::move(next);
  }
  return cur;
}

struct HilbertReport {
  Presentation p;
  std::vector<Int> h_values;  // h(0..n-1)
  std::vector<Int> h_vector;  // numerator coefficients h_0..h_{n-1}
  std::vector<Int> numerator; // h_vector with trailing zeros trimmed
  int denominator_exponent = 0;
  long long a_invariant = 0;
};

inline long long a_invariant_from_numerator(const std::vector<Int>& numerator, int n) {
  long long deg = -1;
  for (std::size_t j = 0; j < numerator.size(); ++j)
    if (numerator[j] != 0) deg = static_cast<long long>(j);
  if (deg < 0) throw std::logic_error("a_invariant: zero numerator");
  return deg - n;
}

inline long long a_invariant(const HilbertReport& r) {
  return a_invariant_from_numerator(r.h_vector, r.p.n);
}

// h-vector from the first n Hilbert values via the n-th difference,
// truncated at j = n-1. Positivity, h_0 = 1 and a nonzero top coefficient
// are asserted rather than assumed.
inline HilbertReport h_vector(const Presentation& p) {
  HilbertReport r;
  r.p = p;
  r.denominator_exponent = p.n;
  for (int j = 0; j < p.n; ++j) r.h_values.push_back(hilbert_closed_form(p.n, p.i, j));
  r.h_vector = difference_transform(r.h_values, p.n);
  if (r.h_vector.front() != 1) throw std::logic_error("h_vector: constant term is not 1");
  for (const Int& h : r.h_vector)
    if (h < 0) throw std::logic_error("h_vector: negative coefficient");
  if (r.h_vector.back() == 0) throw std::logic_error("h_vector: vanishing top coefficient");
  r.numerator = r.h_vector;
  while (!r.numerator.empty() && r.numerator.back() == 0) r.numerator.pop_back();
  r.a_invariant = a_invariant(r);
  return r;
}

struct SeriesCheck {
  bool ok = false;
  long long failing_index = -1;
};

// Expands numerator / (1-T)^n to order t_max and compares every coefficient
// with the closed form. The first n values built the numerator, so indices
// n..t_max are the substantive prediction.
inline SeriesCheck series_eval_check(const HilbertReport& r, long long t_max) {
  if (t_max < r.p.n) throw std::invalid_argument("series_eval_check: t_max must be >= n");
  for (long long j = 0; j <= t_max; ++j) {
    Int coeff = 0;
    for (std::size_t s = 0; s < r.h_vector.size(); ++s) {
      if (static_cast<long long>(s) > j) break;
      coeff += r.h_vector[s] * binom(j - static_cast<long long>(s) + r.p.n - 1, r.p.n - 1);
    }
    if (coeff != hilbert_closed_form(r.p.n, r.p.i, j)) return SeriesCheck{false, j};
  }
  return SeriesCheck{true, -1};
}

}  // namespace basecone

#endif  // BASECONE_HILBERT_HPP
