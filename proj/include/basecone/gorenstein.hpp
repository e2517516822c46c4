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

// Canonical-module computations at bounded degree: monoid points of NA by
// breadth-first closure, their relative-interior subset, the shift identity
//   NA cap ri(R+A) = (1,...,1) + NA,
// and the Gorenstein certificate that the interior has the single minimal
// generator (1,...,1).

#ifndef BASECONE_GORENSTEIN_HPP
#define BASECONE_GORENSTEIN_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "basecone/cone.hpp"
#include "basecone/ehrhart.hpp"
#include "basecone/presentation.hpp"
#include "basecone/vec.hpp"

namespace basecone {

// Relative-interior filter for the family cone: strict positivity on every
// coordinate plus strictly positive primitive block-facet value. The
// primitive form divides the block normal by d = gcd(n, i+1).
struct InteriorFilter {
  int n = 0;
  Vec primitive_block_normal;
  long long n_over_d = 0;  // facet values of lattice points are multiples of this

  bool is_interior(const Vec& x) const {
    for (const Int& c : x)
      if (c <= 0) return false;
    return dot(x, primitive_block_normal) > 0;
  }
};

inline InteriorFilter interior_filter(const Presentation& p) {
  InteriorFilter f;
  f.n = p.n;
  Vec nu = block_normal(p.n, p.i, p.shift).halfspace.normal;
  const long long d = std::gcd(static_cast<long long>(p.n), static_cast<long long>(p.i) + 1);
  f.primitive_block_normal = Vec(nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) f.primitive_block_normal[k] = nu[k] / d;
  f.n_over_d = p.n / d;
  return f;
}

// All sums of at most T base elements, stratified by degree t = |alpha| / n.
// The closure uses packed 64-bit keys, which bounds the reach to n <= 8 and
// coordinates <= 255; that covers the desk-scale contract.
class MonoidSet {
 public:
  MonoidSet(const BaseSet& base, long long T) : n_(base.n()), bound_(T) {
    if (T < 0) throw std::invalid_argument("monoid_points: degree bound must be >= 0");
    if (!packable(static_cast<std::size_t>(n_), static_cast<long long>(n_) * T))
      throw ResourceLimitError("monoid_points: n*T exceeds the packed-coordinate guard");
    std::vector<std::uint64_t> base_keys;
    for (const Vec& v : base.elements()) base_keys.push_back(pack_key(v));

    strata_keys_.resize(static_cast<std::size_t>(T) + 1);
    strata_keys_[0].push_back(0);  // origin
    keys_.insert(0);
    for (long long t = 1; t <= T; ++t) {
      std::unordered_set<std::uint64_t> stratum;
      for (std::uint64_t prev : strata_keys_[static_cast<std::size_t>(t - 1)])
        for (std::uint64_t b : base_keys)
          stratum.insert(prev + b);  // per-coordinate sums stay below 256
      auto& dst = strata_keys_[static_cast<std::size_t>(t)];
      dst.assign(stratum.begin(), stratum.end());
      std::sort(dst.begin(), dst.end());
      keys_.insert(dst.begin(), dst.end());
    }
  }

  int n() const { return n_; }
  long long degree_bound() const { return bound_; }

  bool contains(const Vec& v) const {
    for (const Int& c : v)
      if (c < 0 || c > kPackMaxCoord) return false;
    return keys_.count(pack_key(v)) > 0;
  }

  std::vector<Vec> stratum(long long t) const {
    if (t < 0 || t > bound_) throw std::invalid_argument("MonoidSet::stratum: degree out of range");
    std::vector<Vec> out;
    for (std::uint64_t k : strata_keys_[static_cast<std::size_t>(t)])
      out.push_back(unpack_key(k, static_cast<std::size_t>(n_)));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  std::vector<Vec> all_points() const {
    std::vector<Vec> out;
    for (long long t = 0; t <= bound_; ++t) {
      std::vector<Vec> s = stratum(t);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

 private:
  int n_;
  long long bound_;
  std::vector<std::vector<std::uint64_t>> strata_keys_;
  std::unordered_set<std::uint64_t> keys_;
};

inline MonoidSet monoid_points(const Presentation& p, long long T) {
  return MonoidSet(enumerate_base(p), T);
}

// Monoid points in the relative interior, in canonical order.
inline std::vector<Vec> interior_points(const MonoidSet& monoid, const InteriorFilter& filter) {
  std::vector<Vec> out;
  for (long long t = 0; t <= monoid.degree_bound(); ++t)
    for (Vec& v : monoid.stratum(t))
      if (filter.is_interior(v)) out.push_back(std::move(v));
  return out;
}

inline std::vector<Vec> interior_points(const Presentation& p, long long T) {
  return interior_points(monoid_points(p, T), interior_filter(p));
}

// Points whose primitive block-facet value falls in the forbidden window
// 1..n/d-1. For genuine monoid points the value is a multiple of n/d, so any
// hit disproves the input set.
inline std::vector<Vec> divisibility_violations(const std::vector<Vec>& points,
                                                const Vec& primitive_block_normal,
                                                long long n_over_d) {
  std::vector<Vec> bad;
  for (const Vec& x : points) {
    Int v = dot(x, primitive_block_normal);
    if (v >= 1 && v <= n_over_d - 1) bad.push_back(x);
  }
  return bad;
}

struct ShiftIdentityReport {
  bool ok = false;
  std::optional<Vec> failing_point;
  std::string reason;  // empty when ok
};

// Checks both inclusions of the shift identity on all points of degree <= T,
// plus the divisibility step that rules out fractional facet values.
inline ShiftIdentityReport verify_shift_identity(const MonoidSet& monoid,
                                                 const InteriorFilter& filter) {
  const long long T = monoid.degree_bound();
  const std::size_t n = static_cast<std::size_t>(monoid.n());
  const Vec ones(n, 1);

  for (long long t = 0; t <= T; ++t) {
    for (const Vec& alpha : monoid.stratum(t)) {
      if (!filter.is_interior(alpha)) continue;
      Int v = dot(alpha, filter.primitive_block_normal);
      if (v >= 1 && v <= filter.n_over_d - 1)
        return ShiftIdentityReport{false, alpha,
                                   "interior point with facet value in the forbidden window"};
      if (!monoid.contains(sub(alpha, ones)))
        return ShiftIdentityReport{false, alpha,
                                   "interior point whose shift by -(1,...,1) leaves the monoid"};
    }
  }
  for (long long t = 0; t + 1 <= T; ++t) {
    for (const Vec& beta : monoid.stratum(t)) {
      Vec up = add(beta, ones);
      if (!filter.is_interior(up))
        return ShiftIdentityReport{false, beta,
                                   "monoid point whose shift by (1,...,1) is not interior"};
      if (!monoid.contains(up))
        return ShiftIdentityReport{false, beta,
                                   "monoid point whose shift by (1,...,1) leaves the monoid"};
    }
  }
  return ShiftIdentityReport{true, std::nullopt, ""};
}

inline ShiftIdentityReport verify_shift_identity(const Presentation& p, long long T) {
  return verify_shift_identity(monoid_points(p, T), interior_filter(p));
}

struct CanonicalModuleReport {
  Presentation p;
  long long degree_bound = 0;  // T
  std::vector<Vec> interior_points;
  std::vector<Vec> minimal_generators;
  long long min_degree = 0;    // min |alpha|/n over interior points
  bool gorenstein = false;     // minimal generator set == {(1,...,1)}
  bool shift_identity = false;
  bool divisibility_ok = false;
  long long a_invariant = 0;   // -min_degree
};

// Bounded-degree certificate that the canonical module is principal with
// generator (1,...,1). Minimality subtracts degree-1 base elements only; the
// monoid is generated in degree 1 by construction.
inline CanonicalModuleReport gorenstein_certificate(const Presentation& p, long long T) {
  if (T < 2)
    throw std::invalid_argument("gorenstein_certificate: degree bound must satisfy T >= 2");
  const BaseSet base = enumerate_base(p);
  const MonoidSet monoid(base, T);
  const InteriorFilter filter = interior_filter(p);

  CanonicalModuleReport r;
  r.p = p;
  r.degree_bound = T;
  r.interior_points = interior_points(monoid, filter);
  if (r.interior_points.empty())
    throw std::logic_error("gorenstein_certificate: no interior points within the bound");

  std::unordered_set<std::uint64_t> interior_keys;
  for (const Vec& v : r.interior_points) interior_keys.insert(pack_key(v));
  for (const Vec& alpha : r.interior_points) {
    bool reducible = false;
    for (const Vec& b : base.elements()) {
      Vec rest = sub(alpha, b);
      bool nonneg = true;
      for (const Int& c : rest)
        if (c < 0) {
          nonneg = false;
          break;
        }
      if (nonneg && interior_keys.count(pack_key(rest))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) r.minimal_generators.push_back(alpha);
  }

  Int min_sum = coord_sum(r.interior_points.front());
  for (const Vec& v : r.interior_points) {
    Int s = coord_sum(v);
    if (s < min_sum) min_sum = s;
  }
  r.min_degree = to_int64(min_sum / p.n);
  r.a_invariant = -r.min_degree;

  const Vec ones(static_cast<std::size_t>(p.n), 1);
  r.gorenstein = (r.minimal_generators.size() == 1 && r.minimal_generators.front() == ones);

  ShiftIdentityReport shift = verify_shift_identity(monoid, filter);
  r.shift_identity = shift.ok;
  r.divisibility_ok =
      divisibility_violations(r.interior_points, filter.primitive_block_normal, filter.n_over_d)
          .empty();
  return r;
}

}  // namespace basecone

#endif  // BASECONE_GORENSTEIN_HPP
