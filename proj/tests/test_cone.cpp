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

#include "basecone/cone.hpp"
#include "basecone/dd.hpp"
#include "basecone/presentation.hpp"

using namespace basecone;

TEST_CASE("block normals at n=4 reproduce the reference values") {
  CHECK(block_normal(4, 1, 0).halfspace.normal == Vec{-2, 2, 2, 2});
  CHECK(block_normal(4, 2, 3).halfspace.normal == Vec{-1, 3, 3, -1});
  CHECK(block_normal(4, 3, 1).halfspace.normal == Vec{4, 0, 0, 0});
  CHECK(block_normal(4, 2, 0).halfspace.normal == Vec{-1, -1, 3, 3});
  CHECK(block_normal(4, 1, 2).halfspace.normal == Vec{2, 2, -2, 2});
  // i = n-1 degenerates to a coordinate facet.
  CHECK(block_normal(4, 3, 0).kind == FacetKind::Coordinate);
  CHECK(block_normal(4, 1, 0).kind == FacetKind::Block);
}

TEST_CASE("block normal rejects out-of-range parameters") {
  CHECK_THROWS_AS(block_normal(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(block_normal(4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(block_normal(4, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(block_normal(4, 1, -1), std::invalid_argument);
}

TEST_CASE("halfspace keeps both the raw and the primitive normal") {
  Halfspace h(Vec{-2, 2, 2, 2});
  CHECK(h.normal == Vec{-2, 2, 2, 2});
  CHECK(h.primitive_normal == Vec{-1, 1, 1, 1});
  CHECK_THROWS_AS(Halfspace(Vec{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("predicted facets: one block facet plus n coordinate facets") {
  Presentation p = build_presentation(4, 1, 0);
  std::vector<Halfspace> fs = predicted_facets(p);
  REQUIRE(fs.size() == 5);
  CHECK(fs[0].normal == Vec{-2, 2, 2, 2});
  // k = 0..3 coordinate facets are n*e_{sigma^k(n)}.
  CHECK(fs[1].normal == Vec{0, 0, 0, 4});
  CHECK(fs[2].normal == Vec{4, 0, 0, 0});
  CHECK(fs[3].normal == Vec{0, 4, 0, 0});
  CHECK(fs[4].normal == Vec{0, 0, 4, 0});

  std::vector<Halfspace> f3 = predicted_facets(build_presentation(3, 1, 0));
  REQUIRE(f3.size() == 4);
  CHECK(f3[0].normal == Vec{-1, 2, 2});
  CHECK(f3[1].normal == Vec{0, 0, 3});
  CHECK(f3[2].normal == Vec{3, 0, 0});
  CHECK(f3[3].normal == Vec{0, 3, 0});
}

TEST_CASE("predicted facet count is always n+1") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int t = 0; t <= n - 1; ++t)
        CHECK(predicted_facets(build_presentation(n, i, t)).size() ==
              static_cast<std::size_t>(n) + 1);
}

TEST_CASE("predicted extremal rays at small parameters") {
  std::vector<Vec> r31 = predicted_extremal_rays(build_presentation(3, 1, 0));
  std::vector<Vec> expected{Vec{0, 3, 0}, Vec{0, 0, 3}, Vec{2, 1, 0}, Vec{2, 0, 1}};
  sort_unique(expected);
  CHECK(r31 == expected);
  CHECK(predicted_extremal_rays(build_presentation(4, 1, 0)).size() == 6);
}

TEST_CASE("every predicted ray has coordinate sum n and satisfies the facets") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int t = 0; t <= n - 1; ++t) {
        Presentation p = build_presentation(n, i, t);
        std::vector<Vec> rays = predicted_extremal_rays(p);
        CHECK(rays.size() == static_cast<std::size_t>((i + 1) * (n - i)));
        for (const Vec& r : rays) {
          CHECK(coord_sum(r) == n);
          for (const Halfspace& h : predicted_facets(p)) CHECK(dot(r, h.normal) >= 0);
        }
      }
}

TEST_CASE("halfspace containment with block values in n*Z") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int t = 0; t <= n - 1; ++t) {
        Presentation p = build_presentation(n, i, t);
        std::vector<Halfspace> fs = predicted_facets(p);
        BaseSet base = enumerate_base(p);
        for (const Vec& g : base.elements()) {
          for (const Halfspace& h : fs) CHECK(dot(g, h.normal) >= 0);
          Int bv = dot(g, fs[0].normal);
          CHECK(bv >= 0);
          CHECK(bv % n == 0);
        }
      }
}

TEST_CASE("determinant certificate equals the closed form") {
  CHECK(det_certificate(build_presentation(4, 1, 0)) == 32);
  CHECK(det_certificate(build_presentation(3, 1, 0)) == 6);
  // n (i+1)^i (n-i-1)^(n-i-1) at (6,2) = 6 * 9 * 27.
  CHECK(det_certificate(build_presentation(6, 2, 0)) == 1458);
  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i <= n - 2; ++i) CHECK_NOTHROW(det_certificate(build_presentation(n, i, 0)));
}

TEST_CASE("membership classifies interior, boundary and outside points") {
  Presentation p = build_presentation(4, 1, 0);
  ConeDescription cone = dd_hull(enumerate_base(p).elements());

  Membership inside = membership(Vec{1, 1, 1, 1}, cone);
  CHECK(inside.region == Region::Interior);

  Membership out = membership(Vec{4, 0, 0, 0}, cone);
  CHECK(out.region == Region::Outside);
  REQUIRE(out.facets.size() == 1);
  CHECK(cone.halfspaces[out.facets[0]].primitive_normal == Vec{-1, 1, 1, 1});

  Membership apex = membership(Vec{0, 0, 0, 0}, cone);
  CHECK(apex.region == Region::Boundary);
  CHECK(apex.facets.size() == cone.halfspaces.size());

  CHECK_THROWS_AS(membership(Vec{1, 1, 1}, cone), std::invalid_argument);
}
