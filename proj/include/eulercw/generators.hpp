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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>

#include "eulercw/complex.hpp"

namespace eulercw {

namespace family {

/// C_n: vertices v1..vn, edges e{i}-{j}.
struct Cycle {
  int n = 3;
};

/// Triangle of side `rows` cut into unit triangles; only the 1-skeleton is
/// kept. Every vertex has degree 2, 4 or 6.
struct TriangularGrid {
  int rows = 3;
};

/// k-skeleton of the simplex on `vertices` vertices.
struct SimplexSkeleton {
  int vertices = 3;
  int k = 1;
};

/// k-skeleton of the d-cube. Faces are named by {0,1,x} patterns.
struct HypercubeSkeleton {
  int d = 3;
  int k = 2;
};

/// k-skeleton of the boundary of the d-dimensional cross-polytope
/// (vertices a{i} = +e_i, b{i} = -e_i).
struct CrossPolytopeSkeleton {
  int d = 3;
  int k = 2;
};

/// The finned circlet C(k, m): k*m squares around a k-cycle spine, closed up
/// with a twist of one leaf and capped by a km-gon.
struct FinnedCirclet {
  int k = 3;
  int m = 4;
};

/// Strongly connected even complex built from random circlets. In dimension
/// 1 `size` is the vertex count (cycles on a shared vertex set, parallel
/// edges allowed); in dimension 2 it is the number of tetrahedron or
/// octahedron boundaries glued along shared edges.
struct RandomEven {
  std::uint64_t seed = 0;
  int size = 4;
  int dim = 2;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Cycle, family::TriangularGrid, family::SimplexSkeleton,
                 family::HypercubeSkeleton, family::CrossPolytopeSkeleton,
                 family::FinnedCirclet, family::RandomEven>;

/// Throws BadParameters.
Complex generate(const FamilySpec& spec);

/// Family by name ("cycle", "triangular_grid", "simplex_skeleton",
/// "hypercube_skeleton", "crosspolytope_skeleton", "finned_circlet",
/// "random_even") with positional integer parameters. random_even takes
/// seed, size and an optional dimension. Throws BadParameters.
FamilySpec family_from_args(std::string_view name, std::span<const long long> params);

}  // namespace eulercw
