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

// Incremental double description over exact integers. The engine intersects
// halfspaces one at a time, maintaining a lineality basis plus the extreme
// rays of the pointed part; adjacency of ray pairs is decided by the
// combinatorial tight-set test, which stays exact because a combined ray is
// tight at a processed constraint iff both parents are.
//
// dd_hull dualizes: the extreme rays of {y : <g,y> >= 0 for all generators g}
// are the facet normals of the cone generated by the g, and the extremal
// rays of that cone are recovered among the generators by a tight-facet rank
// test. Everything is big-integer arithmetic; no floating point.

#ifndef BASECONE_DD_HPP
#define BASECONE_DD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "basecone/cone.hpp"
#include "basecone/linalg.hpp"
#include "basecone/vec.hpp"

namespace basecone {

struct DDResult {
  std::vector<Vec> rays;       // extreme rays of the pointed part, primitive, sorted
  std::vector<Vec> lineality;  // basis of the lineality space, primitive, sorted
};

namespace detail {

struct DDRay {
  Vec v;
  boost::dynamic_bitset<> tight;  // over processed constraint indices
};

}  // namespace detail

// Extreme rays and lineality of {y in R^dim : <a, y> >= 0 for every a in
// constraints}. Output is canonical regardless of constraint order.
inline DDResult dd_cone_from_halfspaces(const std::vector<Vec>& constraints, std::size_t dim) {
  for (const Vec& a : constraints) {
    if (a.size() != dim) throw std::invalid_argument("dd: constraint dimension mismatch");
    if (is_zero(a)) throw std::invalid_argument("dd: zero constraint vector");
  }
  const std::size_t m = constraints.size();

  std::vector<Vec> lin;  // current lineality basis
  for (std::size_t k = 0; k < dim; ++k) {
    Vec e(dim, 0);
    e[k] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<detail::DDRay> rays;

  for (std::size_t ci = 0; ci < m; ++ci) {
    const Vec& a = constraints[ci];

    std::size_t hit = lin.size();
    for (std::size_t j = 0; j < lin.size(); ++j)
      if (dot(a, lin[j]) != 0) {
        hit = j;
        break;
      }

    if (hit != lin.size()) {
      // The constraint cuts the lineality space: one basis vector becomes a
      // ray on the positive side, the rest are projected into a^perp.
      Vec star = lin[hit];
      Int sv = dot(a, star);
      if (sv < 0) {
        star = scaled(star, -1);
        sv = -sv;
      }
      std::vector<Vec> new_lin;
      for (std::size_t j = 0; j < lin.size(); ++j) {
        if (j == hit) continue;
        Int lv = dot(a, lin[j]);
        new_lin.push_back(lv == 0 ? lin[j] : primitive(combine(sv, lin[j], lv, star)));
      }
      for (detail::DDRay& r : rays) {
        Int rv = dot(a, r.v);
        if (rv != 0) r.v = primitive(combine(sv, r.v, rv, star));
        r.tight.push_back(true);  // projected rays land on the hyperplane
      }
      detail::DDRay nr;
      nr.v = primitive(star);
      nr.tight.resize(ci + 1);
      nr.tight.set();          // was lineality: on every processed hyperplane
      nr.tight[ci] = false;    // strictly positive on the new constraint
      rays.push_back(std::move(nr));
      lin = std::move(new_lin);
      continue;
    }

    // Lineality is orthogonal to a; classic ray step.
    std::vector<std::size_t> pos, neg;
    std::vector<Int> vals(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(a, rays[r].v);
      if (vals[r] > 0)
        pos.push_back(r);
      else if (vals[r] < 0)
        neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) rays[r].tight.push_back(vals[r] == 0);
      continue;
    }

    std::vector<detail::DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] < 0) continue;
      detail::DDRay keep = rays[r];
      keep.tight.push_back(vals[r] == 0);
      next.push_back(std::move(keep));
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        // Adjacency: no third ray is tight everywhere both parents are.
        boost::dynamic_bitset<> common = rays[ip].tight & rays[in].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == ip || r == in) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        detail::DDRay nr;
        nr.v = primitive(combine(vals[ip], rays[in].v, vals[in], rays[ip].v));
        nr.tight = std::move(common);
        nr.tight.push_back(true);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  DDResult out;
  for (const detail::DDRay& r : rays) out.rays.push_back(primitive(r.v));
  for (const Vec& b : lin) {
    Vec p = primitive(b);
    // Canonical sign: first nonzero entry positive.
    for (const Int& x : p) {
      if (x == 0) continue;
      if (x < 0) p = scaled(p, -1);
      break;
    }
    out.lineality.push_back(std::move(p));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  std::sort(out.lineality.begin(), out.lineality.end(), lex_less);
  return out;
}

// Exact H- and V-description of the cone generated by integer vectors.
inline ConeDescription dd_hull(const std::vector<Vec>& generators) {
  if (generators.empty()) throw std::invalid_argument("dd_hull: no generators");
  const std::size_t dim = generators[0].size();
  if (dim == 0 || dim > 10) throw std::invalid_argument("dd_hull: ambient dimension must be in 1..10");
  for (const Vec& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("dd_hull: generator dimension mismatch");
    if (is_zero(g)) throw std::invalid_argument("dd_hull: zero generators rejected");
  }

  ConeDescription cone;
  cone.dim = dim;
  cone.generators = generators;
  sort_unique(cone.generators);

  // Dual side: rays of D = {y : <g,y> >= 0} are the facet normals; the
  // lineality of D is the orthogonal complement of span(generators).
  DDResult dual = dd_cone_from_halfspaces(cone.generators, dim);
  for (const Vec& r : dual.rays) cone.halfspaces.emplace_back(r);
  cone.equations = dual.lineality;
  cone.full_dimensional = dual.lineality.empty();

  Mat span_check;
  for (const Vec& r : dual.rays) span_check.push_back(r);
  for (const Vec& b : dual.lineality) span_check.push_back(b);
  cone.pointed = rank_of(span_check) == dim;

  // Extremal rays lie on generators: a generator is extremal iff its tight
  // facet normals together with the equations have rank dim-1.
  if (cone.pointed) {
    std::vector<Vec> prim;
    for (const Vec& g : cone.generators) prim.push_back(primitive(g));
    sort_unique(prim);
    for (const Vec& g : prim) {
      Mat tight = cone.equations;
      for (const Halfspace& h : cone.halfspaces)
        if (dot(g, h.normal) == 0) tight.push_back(h.normal);
      if (rank_of(tight) == dim - 1) cone.extremal_rays.push_back(g);
    }
    std::sort(cone.extremal_rays.begin(), cone.extremal_rays.end(), lex_less);
  }

  // The dual extreme rays form a minimal H-description by construction.
  cone.irreducible = true;
  return cone;
}

struct FacetWitness {
  std::size_t facet = 0;
  Vec point;  // inside the relaxation, strictly outside the dropped halfspace
};

struct IrreducibilityReport {
  bool irreducible = false;
  std::vector<FacetWitness> witnesses;             // one per facet when irreducible
  std::optional<std::size_t> redundant_index;      // first redundant halfspace otherwise
};

// Drop-one test: the description is irreducible iff removing any single
// halfspace strictly enlarges the intersection. Witnesses are integer points
// (rays of the relaxed cone) violating only the dropped inequality.
inline IrreducibilityReport verify_irreducible(const std::vector<Halfspace>& halfspaces,
                                               const std::vector<Vec>& generators) {
  if (halfspaces.empty()) throw std::invalid_argument("verify_irreducible: no halfspaces");
  const std::size_t dim = halfspaces[0].normal.size();
  for (const Vec& g : generators)
    for (const Halfspace& h : halfspaces)
      if (dot(g, h.normal) < 0)
        throw std::invalid_argument("verify_irreducible: a generator violates a halfspace");

  IrreducibilityReport report;
  report.irreducible = true;
  for (std::size_t drop = 0; drop < halfspaces.size(); ++drop) {
    std::vector<Vec> rest;
    for (std::size_t j = 0; j < halfspaces.size(); ++j)
      if (j != drop) rest.push_back(halfspaces[j].normal);
    std::optional<Vec> witness;
    if (rest.empty()) {
      Vec w = scaled(halfspaces[drop].normal, -1);
      witness = w;
    } else {
      DDResult relaxed = dd_cone_from_halfspaces(rest, dim);
      for (const Vec& r : relaxed.rays)
        if (dot(r, halfspaces[drop].normal) < 0) {
          witness = r;
          break;
        }
      if (!witness) {
        for (const Vec& b : relaxed.lineality) {
          Int v = dot(b, halfspaces[drop].normal);
          if (v > 0) witness = scaled(b, -1);
          if (v < 0) witness = b;
          if (witness) break;
        }
      }
    }
    if (witness) {
      report.witnesses.push_back(FacetWitness{drop, *witness});
    } else {
      report.irreducible = false;
      report.redundant_index = drop;
      report.witnesses.clear();
      return report;
    }
  }
  return report;
}

}  // namespace basecone

#endif  // BASECONE_DD_HPP
