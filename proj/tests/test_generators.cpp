/*
Copyright 2026 The eulercw Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulercw/euler_cover.hpp"
#include "eulercw/gf2_matroid.hpp"
#include "support.hpp"

using namespace eulercw;
using namespace eulercw::testing;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::size_t> counts(const Complex& k) {
  std::vector<std::size_t> out;
  for (int r = 0; r <= k.dimension(); ++r) out.push_back(k.cells_of_dim(r).size());
  return out;
}

std::vector<FamilySpec> sample_specs() {
  std::vector<FamilySpec> out;
  for (int n : {3, 4, 7}) out.push_back(family::Cycle{n});
  for (int rows : {1, 2, 3, 4}) out.push_back(family::TriangularGrid{rows});
  for (int v = 1; v <= 7; ++v) {
    for (int k = 0; k < v && k <= 4; ++k) out.push_back(family::SimplexSkeleton{v, k});
  }
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= d; ++k) out.push_back(family::HypercubeSkeleton{d, k});
    for (int k = 0; k < d; ++k) out.push_back(family::CrossPolytopeSkeleton{d, k});
  }
  out.push_back(family::FinnedCirclet{3, 4});
  out.push_back(family::FinnedCirclet{3, 6});
  out.push_back(family::FinnedCirclet{4, 4});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    out.push_back(family::RandomEven{seed, 4, 2});
    out.push_back(family::RandomEven{seed, 8, 1});
  }
  return out;
}

}  // namespace

TEST_CASE("every generated complex is regular and deterministic") {
  const auto specs = sample_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const FamilySpec& spec = specs[i];
    const Complex k = generate(spec);
    CAPTURE(i);
    CHECK(validate_regularity(k).passed());
    CHECK(generate(spec) == k);
  }
}

TEST_CASE("simplex skeleton counts are binomial") {
  for (int v = 1; v <= 7; ++v) {
    for (int k = 0; k < v && k <= 4; ++k) {
      const Complex s = generate(family::SimplexSkeleton{v, k});
      CAPTURE(v);
      CAPTURE(k);
      REQUIRE(s.dimension() == k);
      for (int r = 0; r <= k; ++r) {
        CHECK(s.cells_of_dim(r).size() == binomial(static_cast<std::size_t>(v), static_cast<std::size_t>(r + 1)));
      }
    }
  }
}

TEST_CASE("fixture examples") {
  CHECK(counts(delta5_2()) == std::vector<std::size_t>{6, 15, 20});
  const Complex c6 = cycle(6);
  CHECK(counts(c6) == std::vector<std::size_t>{6, 6});
  for (CellIndex v : c6.cells_of_dim(0)) CHECK(c6.cell(v).coboundary.size() == 2);
  CHECK(counts(grid()) == std::vector<std::size_t>{10, 18});
  CHECK(degree_profile(grid()).is_even);
  CHECK(counts(cube()) == std::vector<std::size_t>{8, 12, 6});
  CHECK(counts(octahedron()) == std::vector<std::size_t>{6, 12, 8});
  CHECK(counts(generate(family::HypercubeSkeleton{4, 2})) == std::vector<std::size_t>{16, 32, 24});
  CHECK(counts(generate(family::CrossPolytopeSkeleton{4, 3})) ==
        std::vector<std::size_t>{8, 24, 32, 16});
  CHECK(delta5_2().contains("f1-2-3"));
  CHECK(delta5_2().contains("e1-2"));
  CHECK(delta5_2().contains("v6"));
}

TEST_CASE("polytope boundaries are pseudomanifolds") {
  for (int d = 2; d <= 4; ++d) {
    CHECK(is_pseudomanifold(generate(family::HypercubeSkeleton{d, d - 1})));
    CHECK(is_pseudomanifold(generate(family::CrossPolytopeSkeleton{d, d - 1})));
    CHECK(is_pseudomanifold(generate(family::SimplexSkeleton{d + 1, d - 1})));
  }
}

TEST_CASE("finned circlet degree profile") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 6}, {4, 4}}) {
    CAPTURE(k);
    CAPTURE(m);
    const Complex fin = generate(family::FinnedCirclet{k, m});
    CHECK(fin.facets().size() == static_cast<std::size_t>(k * m + 1));
    const DegreeProfile d = degree_profile(fin);
    CHECK(d.is_even);
    int spine = 0;
    for (const auto& [side, deg] : d.degrees) {
      if (deg == m) {
        ++spine;
      } else {
        CHECK(deg == 2);
      }
    }
    CHECK(spine == k);
    const auto mat = incidence_matrix(fin);
    CHECK(is_circlet_subset(mat, all_facets(fin)));
    // the cap is the only facet with k*m sides
    std::size_t big = 0;
    for (CellIndex f : fin.facets()) {
      if (fin.cell(f).boundary.size() == static_cast<std::size_t>(k * m)) ++big;
    }
    CHECK(big == 1);
  }
}

TEST_CASE("finned circlet: no proper even subset contains the cap") {
  const Complex fin = finned(3, 4);
  const auto list = facet_list(fin);
  std::size_t cap = list.size();
  for (std::size_t p = 0; p < list.size(); ++p) {
    if (fin.cell(fin.index_of(list[p])).boundary.size() == 12) cap = p;
  }
  REQUIRE(cap < list.size());
  const auto incidence = side_incidence(fin);
  const std::uint64_t full = (std::uint64_t{1} << list.size()) - 1;
  std::size_t even_found = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (!((mask >> cap) & 1U)) continue;
    if (mask_is_even(incidence, mask)) {
      ++even_found;
      CHECK(mask == full);
    }
  }
  CHECK(even_found == 1);
}

TEST_CASE("random_even complexes are even, strongly connected and seed reproducible") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (int dim : {1, 2}) {
      const family::RandomEven spec{seed, dim == 1 ? 9 : 5, dim};
      const Complex k = generate(spec);
      CAPTURE(seed);
      CAPTURE(dim);
      CHECK(k.dimension() == dim);
      CHECK(degree_profile(k).is_even);
      CHECK(is_strongly_connected(k));
      CHECK(validate_regularity(k).passed());
      CHECK(generate(spec) == k);
    }
  }
  CHECK_FALSE(generate(family::RandomEven{1, 6, 2}) == generate(family::RandomEven{2, 6, 2}));
}

TEST_CASE("parameter validation") {
  auto bad = [](const FamilySpec& spec) { return code_of([&] { generate(spec); }); };
  CHECK(bad(family::Cycle{2}) == ErrorCode::BadParameters);
  CHECK(bad(family::SimplexSkeleton{2, 2}) == ErrorCode::BadParameters);
  CHECK(bad(family::SimplexSkeleton{0, -1}) == ErrorCode::BadParameters);
  CHECK(bad(family::FinnedCirclet{2, 4}) == ErrorCode::BadParameters);
  CHECK(bad(family::FinnedCirclet{3, 5}) == ErrorCode::BadParameters);
  CHECK(bad(family::FinnedCirclet{3, 2}) == ErrorCode::BadParameters);
  CHECK(bad(family::HypercubeSkeleton{2, 3}) == ErrorCode::BadParameters);
  CHECK(bad(family::TriangularGrid{0}) == ErrorCode::BadParameters);
  CHECK(bad(family::RandomEven{0, 0, 2}) == ErrorCode::BadParameters);
  CHECK(bad(family::RandomEven{0, 4, 3}) == ErrorCode::BadParameters);
}

TEST_CASE("family_from_args") {
  const long long six_two[] = {6, 2};
  CHECK(generate(family_from_args("simplex_skeleton", six_two)) == delta5_2());
  const long long six[] = {6};
  CHECK(generate(family_from_args("cycle", six)) == cycle(6));
  const long long seeded[] = {3, 4};
  CHECK(generate(family_from_args("random_even", seeded)) ==
        generate(family::RandomEven{3, 4, 2}));
  const long long seeded1[] = {3, 4, 1};
  CHECK(generate(family_from_args("random_even", seeded1)) ==
        generate(family::RandomEven{3, 4, 1}));
  CHECK(code_of([&] { family_from_args("no_such_family", six); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { family_from_args("cycle", six_two); }) == ErrorCode::BadParameters);
}
