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

#include <catch2/catch_amalgamated.hpp>

#include "basecone/gorenstein.hpp"
#include "basecone/hilbert.hpp"

using namespace basecone;

TEST_CASE("monoid strata: degree zero and one") {
  MonoidSet m = monoid_points(build_presentation(3, 1, 0), 1);
  CHECK(m.stratum(0) == std::vector<Vec>{Vec{0, 0, 0}});
  CHECK(m.stratum(1).size() == 9);
  CHECK(m.all_points().size() == 10);

  MonoidSet m0 = monoid_points(build_presentation(4, 2, 0), 0);
  CHECK(m0.all_points() == std::vector<Vec>{Vec{0, 0, 0, 0}});
}

TEST_CASE("monoid stratum sizes follow the closed form") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int shift = 0; shift <= n - 1; ++shift) {
        MonoidSet m = monoid_points(build_presentation(n, i, shift), 3);
        for (long long t = 0; t <= 3; ++t)
          CHECK(Int(m.stratum(t).size()) == hilbert_closed_form(n, i, t));
      }
}

TEST_CASE("interior points of the first stratum") {
  std::vector<Vec> pts = interior_points(build_presentation(3, 1, 0), 1);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Vec{1, 1, 1});
}

TEST_CASE("points with a zero coordinate are never interior") {
  InteriorFilter f = interior_filter(build_presentation(4, 2, 1));
  CHECK_FALSE(f.is_interior(Vec{0, 1, 1, 2}));
  CHECK_FALSE(f.is_interior(Vec{1, 1, 0, 2}));
  CHECK(f.is_interior(Vec{1, 1, 1, 1}));
}

TEST_CASE("the interior filter uses the primitive block normal") {
  // d = gcd(4, 2) = 2 divides the block normal (-2,2,2,2).
  InteriorFilter f = interior_filter(build_presentation(4, 1, 0));
  CHECK(f.primitive_block_normal == Vec{-1, 1, 1, 1});
  CHECK(f.n_over_d == 2);
  // (2,2,2,2): strictly positive coordinates and block value 4 > 0.
  CHECK(f.is_interior(Vec{2, 2, 2, 2}));
  MonoidSet m = monoid_points(build_presentation(4, 1, 0), 2);
  CHECK(m.contains(Vec{2, 2, 2, 2}));
}

TEST_CASE("shift identity holds on family cases") {
  CHECK(verify_shift_identity(build_presentation(3, 1, 0), 3).ok);
  CHECK(verify_shift_identity(build_presentation(4, 2, 1), 3).ok);
  CHECK(verify_shift_identity(build_presentation(5, 3, 2), 2).ok);
}

TEST_CASE("divisibility violations are reported for synthetic points") {
  // Family facet for (3,1): primitive normal (-1,2,2), n/d = 3, so values 1
  // and 2 are forbidden. The synthetic point (3,1,1) has value 1.
  std::vector<Vec> synthetic{Vec{3, 1, 1}, Vec{1, 1, 1}};
  std::vector<Vec> bad = divisibility_violations(synthetic, Vec{-1, 2, 2}, 3);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == Vec{3, 1, 1});
}

TEST_CASE("a synthetic generator set fails the shift identity with a counterexample") {
  // Base vectors of (3,1,0) plus the foreign generator (1,0,0): the closure
  // now reaches points like (1,0,0)+(1,1,1) = (2,1,1), whose block value 2
  // sits in the forbidden window 1..n/d-1 = 1..2.
  Presentation p = build_presentation(3, 1, 0);
  std::vector<Vec> gens = enumerate_base(p).elements();
  gens.push_back(Vec{1, 0, 0});
  MonoidSet monoid(BaseSet(3, gens), 3);
  ShiftIdentityReport rep = verify_shift_identity(monoid, interior_filter(p));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.failing_point.has_value());
  CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("gorenstein certificate at pinned parameters") {
  CanonicalModuleReport r = gorenstein_certificate(build_presentation(3, 1, 0), 3);
  CHECK(r.minimal_generators == std::vector<Vec>{Vec{1, 1, 1}});
  CHECK(r.gorenstein);
  CHECK(r.min_degree == 1);
  CHECK(r.a_invariant == -1);
  CHECK(r.shift_identity);
  CHECK(r.divisibility_ok);
  // Interior stratum sizes equal the Hilbert values shifted by one degree.
  CHECK(Int(r.interior_points.size()) ==
        hilbert_closed_form(3, 1, 0) + hilbert_closed_form(3, 1, 1) + hilbert_closed_form(3, 1, 2));

  CanonicalModuleReport r5 = gorenstein_certificate(build_presentation(5, 3, 0), 2);
  CHECK(r5.minimal_generators == std::vector<Vec>{Vec{1, 1, 1, 1, 1}});
  CHECK(r5.gorenstein);
}

TEST_CASE("certificate requires at least two degree strata") {
  CHECK_THROWS_AS(gorenstein_certificate(build_presentation(3, 1, 0), 1), std::invalid_argument);
}

TEST_CASE("canonical and series a-invariants agree across a sweep") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int shift = 0; shift <= n - 1; ++shift) {
        Presentation p = build_presentation(n, i, shift);
        CanonicalModuleReport cm = gorenstein_certificate(p, 3);
        HilbertReport hr = h_vector(p);
        CHECK(cm.a_invariant == -1);
        CHECK(hr.a_invariant == -1);
        CHECK(cm.a_invariant == hr.a_invariant);
        CHECK(cm.gorenstein);
        CHECK(cm.shift_identity);
        CHECK(cm.divisibility_ok);
      }
}

TEST_CASE("interior stratum counts match the shifted Hilbert values") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      Presentation p = build_presentation(n, i, 0);
      MonoidSet m = monoid_points(p, 3);
      InteriorFilter f = interior_filter(p);
      for (long long t = 1; t <= 3; ++t) {
        std::size_t count = 0;
        for (const Vec& v : m.stratum(t))
          if (f.is_interior(v)) ++count;
        CHECK(Int(count) == hilbert_closed_form(n, i, t - 1));
      }
    }
}

TEST_CASE("monoid guard rejects unpackable bounds") {
  CHECK_THROWS_AS(monoid_points(build_presentation(8, 1, 0), 40), ResourceLimitError);
}
