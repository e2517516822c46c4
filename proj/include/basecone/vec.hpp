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

#ifndef BASECONE_VEC_HPP
#define BASECONE_VEC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace basecone {

// All geometry runs on exact integers; counts and determinants can exceed
// 64 bits, so one arbitrary-precision type is used throughout.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Int coord_sum(const Vec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline Vec scaled(const Vec& a, const Int& c) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * c;
  return r;
}

// r = p*a - q*b, the combination step shared by the cone machinery.
inline Vec combine(const Int& p, const Vec& a, const Int& q, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = p * a[k] - q * b[k];
  return r;
}

inline Int entries_gcd(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  return g;
}

// Divides out the gcd of the entries; orientation is preserved.
inline Vec primitive(const Vec& v) {
  Int g = entries_gcd(v);
  if (g == 0) return v;
  Vec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] / g;
  return r;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Coordinate permutation by the cyclic shift: entry at position m moves to
// position sigma^t(m). Positions are 1-based in the math, 0-based in storage.
inline Vec apply_cycle_shift(const Vec& v, int t) {
  const int n = static_cast<int>(v.size());
  Vec r(v.size());
  for (int m = 0; m < n; ++m) r[(m + t) % n] = v[m];
  return r;
}

inline long long to_int64(const Int& x) {
  if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
    throw std::overflow_error("to_int64: value exceeds 64-bit range");
  return x.convert_to<long long>();
}

inline Vec to_vec(const std::vector<long long>& v) {
  Vec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k];
  return r;
}

inline std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ",";
    os << v[k];
  }
  os << ")";
  return os.str();
}

// Dense packing of short nonnegative vectors into one 64-bit key, used for
// fast dedup in enumeration and monoid closures. Requires n <= 8 and every
// coordinate in [0, 255].
constexpr std::size_t kPackMaxDim = 8;
constexpr long long kPackMaxCoord = 255;

inline bool packable(std::size_t dim, long long max_coord) {
  return dim <= kPackMaxDim && max_coord >= 0 && max_coord <= kPackMaxCoord;
}

inline std::uint64_t pack_key(const Vec& v) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    long long x = to_int64(v[k]);
    if (x < 0 || x > kPackMaxCoord) throw std::overflow_error("pack_key: coordinate out of range");
    key |= static_cast<std::uint64_t>(x) << (8 * k);
  }
  return key;
}

inline Vec unpack_key(std::uint64_t key, std::size_t dim) {
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = static_cast<long long>((key >> (8 * k)) & 0xff);
  return v;
}

// Visits every alpha in N^parts with coordinate sum = total, in colex order
// of the tail. The same buffer is reused across calls.
template <typename Fn>
void for_each_composition(long long total, std::size_t parts, Fn&& fn) {
  if (parts == 0) {
    if (total == 0) {
      std::vector<long long> empty;
      fn(empty);
    }
    return;
  }
  std::vector<long long> alpha(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, long long rest) -> void {
    if (pos + 1 == parts) {
      alpha[pos] = rest;
      fn(alpha);
      return;
    }
    for (long long x = 0; x <= rest; ++x) {
      alpha[pos] = x;
      self(self, pos + 1, rest - x);
    }
  };
  rec(rec, 0, total);
}

}  // namespace basecone

#endif  // BASECONE_VEC_HPP
