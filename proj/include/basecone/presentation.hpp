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

// Transversal presentations of the one-parameter family: n member sets over
// [n], of which i+1 are all of [n] and the remaining n-1-i are the complement
// of a cyclically shifted index block. Enumerating one index per member set
// and summing unit vectors yields the base exponent set of the associated
// discrete polymatroid.

#ifndef BASECONE_PRESENTATION_HPP
#define BASECONE_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "basecone/vec.hpp"

namespace basecone {

// sigma^t applied to m, where sigma = (1,2,...,n) is the length-n cycle.
// Indices are 1-based.
inline int cycle_apply(int n, int t, int m) {
  if (n < 1) throw std::domain_error("cycle_apply: n must be >= 1");
  if (m < 1 || m > n) throw std::domain_error("cycle_apply: index m out of range [1, n]");
  if (t < 0) throw std::domain_error("cycle_apply: shift t must be >= 0");
  return (m + t - 1) % n + 1;
}

struct Presentation {
  int n = 0;      // ambient dimension, >= 3
  int i = 0;      // block parameter, 1 <= i <= n-2
  int shift = 0;  // cyclic shift t, 0 <= t <= n-1

  // The shifted index block sigma^t[i] = {sigma^t(1), ..., sigma^t(i)}, sorted.
  std::vector<int> block() const {
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(i));
    for (int k = 1; k <= i; ++k) b.push_back(cycle_apply(n, shift, k));
    std::sort(b.begin(), b.end());
    return b;
  }

  // Member set assigned to rank k (the set indexed sigma^t(k)): full [n] for
  // k <= i and k = n, the block complement otherwise.
  std::vector<int> member_set_by_rank(int k) const {
    if (k < 1 || k > n) throw std::domain_error("member_set_by_rank: rank out of range [1, n]");
    std::vector<int> s;
    if (k <= i || k == n) {
      for (int j = 1; j <= n; ++j) s.push_back(j);
      return s;
    }
    std::vector<int> b = block();
    for (int j = 1; j <= n; ++j)
      if (!std::binary_search(b.begin(), b.end(), j)) s.push_back(j);
    return s;
  }

  // Member set stored at position m in 1..n; position sigma^t(k) holds the
  // rank-k set.
  std::vector<int> member_set(int m) const {
    if (m < 1 || m > n) throw std::domain_error("member_set: position out of range [1, n]");
    // k = sigma^{-t}(m)
    int k = cycle_apply(n, n - shift % n, m);
    return member_set_by_rank(k);
  }

  std::vector<std::vector<int>> member_sets() const {
    std::vector<std::vector<int>> all;
    all.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) all.push_back(member_set(m));
    return all;
  }
};

inline Presentation build_presentation(int n, int i, int shift) {
  if (n < 3) throw std::invalid_argument("presentation: n must satisfy n >= 3");
  if (i < 1) throw std::invalid_argument("presentation: i must satisfy i >= 1");
  if (i > n - 2) throw std::invalid_argument("presentation: i must satisfy i <= n-2");
  if (shift < 0 || shift > n - 1)
    throw std::invalid_argument("presentation: shift must satisfy 0 <= shift <= n-1");
  return Presentation{n, i, shift};
}

// Deduplicated exponent set with membership lookups. Works for any family of
// equal-dimension nonnegative vectors; correctness guarantees are scoped to
// the family above, arbitrary sets are accepted for oracle use.
class BaseSet {
 public:
  BaseSet(int n, std::vector<Vec> elems, std::optional<Presentation> source = std::nullopt)
      : n_(n), elems_(std::move(elems)), source_(source) {
    sort_unique(elems_);
    long long max_coord = 0;
    for (const Vec& v : elems_) {
      if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("BaseSet: element dimension mismatch");
      for (const Int& x : v) {
        if (x < 0) throw std::invalid_argument("BaseSet: elements must be nonnegative");
        if (x > max_coord) max_coord = to_int64(x);
      }
    }
    if (packable(static_cast<std::size_t>(n_), max_coord)) {
      keys_.emplace();
      for (const Vec& v : elems_) keys_->insert(pack_key(v));
    }
  }

  int n() const { return n_; }
  const std::vector<Vec>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const std::optional<Presentation>& source() const { return source_; }

  bool contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != n_) return false;
    for (const Int& x : v)
      if (x < 0) return false;
    if (keys_) {
      for (const Int& x : v)
        if (x > kPackMaxCoord) return false;
      return keys_->count(pack_key(v)) > 0;
    }
    return std::binary_search(elems_.begin(), elems_.end(), v, lex_less);
  }

 private:
  int n_;
  std::vector<Vec> elems_;
  std::optional<Presentation> source_;
  std::optional<std::unordered_set<std::uint64_t>> keys_;
};

namespace detail {

// Product over the member sets with one exact symmetry reduction: choices
// drawn from identical member sets are forced nondecreasing, which preserves
// the sum set while pruning permuted duplicates.
inline void product_sums(const std::vector<std::vector<int>>& sets, int n,
                         std::set<Vec>& out) {
  std::vector<std::vector<int>> groups;       // distinct member sets
  std::vector<int> multiplicity;              // how often each occurs
  std::vector<std::vector<int>> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : sorted) {
    if (!groups.empty() && groups.back() == s) {
      ++multiplicity.back();
    } else {
      groups.push_back(s);
      multiplicity.push_back(1);
    }
  }
  std::vector<long long> acc(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t gi, std::size_t ei, int remaining) -> void {
    if (remaining == 0) {
      if (gi + 1 == groups.size())
        out.insert(to_vec(acc));
      else
        self(self, gi + 1, 0, multiplicity[gi + 1]);
      return;
    }
    const std::vector<int>& g = groups[gi];
    for (std::size_t e = ei; e < g.size(); ++e) {
      acc[static_cast<std::size_t>(g[e] - 1)] += 1;
      self(self, gi, e, remaining - 1);
      acc[static_cast<std::size_t>(g[e] - 1)] -= 1;
    }
  };
  if (groups.empty()) {
    out.insert(to_vec(acc));
    return;
  }
  rec(rec, 0, 0, multiplicity[0]);
}

}  // namespace detail

// The base exponent set: all sums of one unit vector per member set,
// deduplicated, in lexicographic order.
inline BaseSet enumerate_base(const Presentation& p) {
  std::set<Vec> out;
  detail::product_sums(p.member_sets(), p.n, out);
  return BaseSet(p.n, std::vector<Vec>(out.begin(), out.end()), p);
}

// Constraint route for the same set: alpha in N^n with |alpha| = n and
// block-sum at most i+1. Equality with enumerate_base is asserted by tests
// and the verification suite.
inline BaseSet enumerate_base_constrained(const Presentation& p) {
  std::vector<int> blk = p.block();
  std::vector<Vec> out;
  for_each_composition(p.n, static_cast<std::size_t>(p.n),
                       [&](const std::vector<long long>& alpha) {
                         long long bsum = 0;
                         for (int b : blk) bsum += alpha[static_cast<std::size_t>(b - 1)];
                         if (bsum <= p.i + 1) out.push_back(to_vec(alpha));
                       });
  return BaseSet(p.n, std::move(out), p);
}

struct ExchangeWitness {
  Vec u;
  Vec v;
  int coord = 0;  // 1-based index where u exceeds v and no exchange exists
};

struct ExchangeCheck {
  bool ok = false;
  std::optional<ExchangeWitness> witness;
};

// Base exchange axiom, checked exhaustively over ordered pairs: whenever
// u_i > v_i there must be j with u_j < v_j and u + e_j - e_i in the set.
inline ExchangeCheck is_polymatroid_base(const BaseSet& b) {
  if (b.size() == 0) throw std::invalid_argument("is_polymatroid_base: empty set");
  const auto& elems = b.elements();
  const Int total = coord_sum(elems.front());
  for (const Vec& v : elems)
    if (coord_sum(v) != total)
      throw std::invalid_argument("is_polymatroid_base: elements have unequal coordinate sums");
  const int n = b.n();
  for (const Vec& u : elems) {
    for (const Vec& v : elems) {
      for (int c = 0; c < n; ++c) {
        if (u[c] <= v[c]) continue;
        bool found = false;
        Vec cand = u;
        cand[c] -= 1;
        for (int j = 0; j < n && !found; ++j) {
          if (u[j] >= v[j]) continue;
          cand[j] += 1;
          if (b.contains(cand)) found = true;
          cand[j] -= 1;
        }
        if (!found) return ExchangeCheck{false, ExchangeWitness{u, v, c + 1}};
      }
    }
  }
  return ExchangeCheck{true, std::nullopt};
}

}  // namespace basecone

#endif  // BASECONE_PRESENTATION_HPP
