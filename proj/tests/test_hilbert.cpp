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

#include <random>

#include "basecone/hilbert.hpp"

using namespace basecone;

TEST_CASE("difference transform at pinned values") {
  CHECK(difference_transform({1, 9, 25}, 1) == std::vector<Int>{1, 8, 16});
  CHECK(difference_transform({1, 9, 25}, 3) == std::vector<Int>{1, 6, 1});
  std::vector<Int> v{4, 7, 11, 2};
  CHECK(difference_transform(v, 0) == v);
}

TEST_CASE("zero extension gives 1 at index 0 for every order") {
  std::vector<Int> values{1, 31, 145, 399};
  for (int k = 1; k <= 6; ++k) CHECK(difference_transform(values, k)[0] == 1);
}

TEST_CASE("closed form equals the iterated recursion") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> val(0, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> values(8);
    for (Int& x : values) x = val(rng);
    for (int k = 0; k <= 8; ++k)
      CHECK(difference_transform(values, k) == difference_transform_iterated(values, k));
  }
}

TEST_CASE("h-vector at pinned parameters") {
  HilbertReport r31 = h_vector(build_presentation(3, 1, 0));
  CHECK(r31.h_values == std::vector<Int>{1, 9, 25});
  CHECK(r31.h_vector == std::vector<Int>{1, 6, 1});
  CHECK(r31.denominator_exponent == 3);
  CHECK(r31.a_invariant == -1);

  HilbertReport r41 = h_vector(build_presentation(4, 1, 0));
  CHECK(r41.h_values == std::vector<Int>{1, 31, 145, 399});
  CHECK(r41.h_vector == std::vector<Int>{1, 27, 27, 1});
  CHECK(r41.a_invariant == -1);
}

TEST_CASE("h_0 = 1 and palindromy across the family") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      HilbertReport r = h_vector(build_presentation(n, i, 0));
      CHECK(r.h_vector.front() == 1);
      const std::size_t m = r.h_vector.size();
      for (std::size_t j = 0; j < m; ++j) CHECK(r.h_vector[j] == r.h_vector[m - 1 - j]);
      for (const Int& h : r.h_vector) CHECK(h >= 0);
    }
}

TEST_CASE("a-invariant from the numerator degree") {
  CHECK(a_invariant_from_numerator({1, 6, 1}, 3) == -1);
  CHECK(a_invariant_from_numerator({1}, 3) == -3);  // polynomial-ring shape
  CHECK(a_invariant_from_numerator({1, 2, 0, 0}, 4) == -3);
  CHECK_THROWS_AS(a_invariant_from_numerator({0, 0}, 2), std::logic_error);
  CHECK(h_vector(build_presentation(5, 2, 4)).a_invariant == -1);
}

TEST_CASE("series expansion reproduces the closed form beyond the window") {
  HilbertReport r31 = h_vector(build_presentation(3, 1, 0));
  SeriesCheck c31 = series_eval_check(r31, 6);
  CHECK(c31.ok);
  // The degree-3 coefficient of (1 + 6T + T^2) / (1-T)^3.
  CHECK(hilbert_closed_form(3, 1, 3) == 49);

  HilbertReport r41 = h_vector(build_presentation(4, 1, 0));
  CHECK(series_eval_check(r41, 8).ok);

  CHECK_THROWS_AS(series_eval_check(r31, 2), std::invalid_argument);
}

TEST_CASE("series check to n+4 across the family") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      HilbertReport r = h_vector(build_presentation(n, i, 0));
      CHECK(series_eval_check(r, n + 4).ok);
    }
}

TEST_CASE("a corrupted numerator fails the series check") {
  HilbertReport r = h_vector(build_presentation(3, 1, 0));
  r.h_vector[1] += 1;
  SeriesCheck c = series_eval_check(r, 6);
  CHECK_FALSE(c.ok);
  CHECK(c.failing_index >= 0);
}
