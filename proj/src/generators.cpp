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

#include "eulercw/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace eulercw {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::BadParameters, message);
}

// Name of a cell spanned by vertex tokens: v1, e1-2, f1-2-3, t1-2-3-4,
// c4_1-2-3-4-5 and so on.
std::string cell_name(int dim, const std::vector<std::string>& tokens) {
  static constexpr std::array<const char*, 4> prefixes{"v", "e", "f", "t"};
  std::string name = dim < 4 ? prefixes[static_cast<std::size_t>(dim)]
                             : "c" + std::to_string(dim) + "_";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) name += '-';
    name += tokens[i];
  }
  return name;
}

std::string vertex(int i) { return "v" + std::to_string(i); }

std::string edge_between(int a, int b) {
  if (b < a) std::swap(a, b);
  return "e" + std::to_string(a) + "-" + std::to_string(b);
}

Complex make_cycle(const family::Cycle& spec) {
  require(spec.n >= 3 && spec.n <= 1000000, "cycle needs n >= 3");
  std::vector<CellSpec> cells;
  for (int i = 1; i <= spec.n; ++i) {
    cells.push_back({vertex(i), 0, {}});
    const int j = i % spec.n + 1;
    cells.push_back({edge_between(i, j), 1, {vertex(i), vertex(j)}});
  }
  return Complex::build(std::move(cells));
}

Complex make_triangular_grid(const family::TriangularGrid& spec) {
  const int r = spec.rows;
  require(r >= 1 && r <= 1000, "triangular_grid needs rows >= 1");
  // Lattice point (i, j) with i + j <= r, numbered row by row from 0.
  auto number = [r](int i, int j) {
    int before = 0;
    for (int row = 0; row < j; ++row) before += r + 1 - row;
    return before + i;
  };
  std::vector<CellSpec> cells;
  auto add_edge = [&](int a, int b) {
    cells.push_back({edge_between(a, b), 1, {vertex(a), vertex(b)}});
  };
  for (int j = 0; j <= r; ++j) {
    for (int i = 0; i + j <= r; ++i) {
      cells.push_back({vertex(number(i, j)), 0, {}});
      if (i + j + 1 <= r) {
        add_edge(number(i, j), number(i + 1, j));
        add_edge(number(i, j), number(i, j + 1));
        add_edge(number(i + 1, j), number(i, j + 1));
      }
    }
  }
  return Complex::build(std::move(cells));
}

Complex make_simplex_skeleton(const family::SimplexSkeleton& spec) {
  require(spec.k >= 0 && spec.vertices >= spec.k + 1 && spec.vertices <= 24,
          "simplex_skeleton needs vertices >= k + 1 >= 1 (and at most 24 vertices)");
  std::vector<CellSpec> cells;
  const int v = spec.vertices;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << v); ++mask) {
    const int dim = std::popcount(mask) - 1;
    if (dim > spec.k) continue;
    std::vector<int> members;
    for (int i = 0; i < v; ++i) {
      if (mask & (std::uint32_t{1} << i)) members.push_back(i + 1);
    }
    auto name_of = [](int d, const std::vector<int>& vs) {
      std::vector<std::string> tokens;
      for (int x : vs) tokens.push_back(std::to_string(x));
      return cell_name(d, tokens);
    };
    CellSpec cell{name_of(dim, members), dim, {}};
    if (dim > 0) {
      for (std::size_t drop = 0; drop < members.size(); ++drop) {
        std::vector<int> face = members;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        cell.boundary.push_back(name_of(dim - 1, face));
      }
    }
    cells.push_back(std::move(cell));
  }
  return Complex::build(std::move(cells));
}

Complex make_hypercube_skeleton(const family::HypercubeSkeleton& spec) {
  require(spec.d >= 1 && spec.d <= 12 && spec.k >= 0 && spec.k <= spec.d,
          "hypercube_skeleton needs 1 <= d <= 12 and 0 <= k <= d");
  const int d = spec.d;
  auto name_of = [](const std::string& pattern) {
    const int dim = static_cast<int>(std::count(pattern.begin(), pattern.end(), 'x'));
    return cell_name(dim, {pattern});
  };
  std::vector<CellSpec> cells;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::string pattern;
    std::size_t rest = code;
    for (int i = 0; i < d; ++i) {
      pattern += "01x"[rest % 3];
      rest /= 3;
    }
    const int dim = static_cast<int>(std::count(pattern.begin(), pattern.end(), 'x'));
    if (dim > spec.k) continue;
    CellSpec cell{name_of(pattern), dim, {}};
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] != 'x') continue;
      for (char bit : {'0', '1'}) {
        std::string face = pattern;
        face[i] = bit;
        cell.boundary.push_back(name_of(face));
      }
    }
    cells.push_back(std::move(cell));
  }
  return Complex::build(std::move(cells));
}

Complex make_crosspolytope_skeleton(const family::CrossPolytopeSkeleton& spec) {
  require(spec.d >= 1 && spec.d <= 12 && spec.k >= 0 && spec.k <= spec.d - 1,
          "crosspolytope_skeleton needs 1 <= d <= 12 and 0 <= k <= d - 1");
  const int d = spec.d;
  auto token = [](int axis, bool positive) {
    return std::string(positive ? "a" : "b") + std::to_string(axis + 1);
  };
  std::vector<CellSpec> cells;
  for (std::uint32_t axes = 1; axes < (std::uint32_t{1} << d); ++axes) {
    const int dim = std::popcount(axes) - 1;
    if (dim > spec.k) continue;
    std::vector<int> used;
    for (int i = 0; i < d; ++i) {
      if (axes & (std::uint32_t{1} << i)) used.push_back(i);
    }
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << used.size()); ++signs) {
      std::vector<std::string> tokens;
      for (std::size_t p = 0; p < used.size(); ++p) {
        tokens.push_back(token(used[p], (signs >> p) & 1U));
      }
      CellSpec cell{cell_name(dim, tokens), dim, {}};
      if (dim > 0) {
        for (std::size_t drop = 0; drop < tokens.size(); ++drop) {
          std::vector<std::string> face = tokens;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          cell.boundary.push_back(cell_name(dim - 1, face));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return Complex::build(std::move(cells));
}

Complex make_finned_circlet(const family::FinnedCirclet& spec) {
  const int k = spec.k;
  const int m = spec.m;
  require(k >= 3 && m >= 4 && m % 2 == 0 && k * m <= 1000000,
          "finned_circlet needs k >= 3 and even m >= 4");
  auto ij = [](const char* prefix, int i, int a) {
    return std::string(prefix) + std::to_string(i) + "_" + std::to_string(a);
  };
  auto hub = [](int i) { return "h" + std::to_string(i); };
  // Layer k is layer 0 turned by one leaf.
  auto next_layer = [&](int i, int a) {
    return i + 1 < k ? std::pair{i + 1, a} : std::pair{0, (a + 1) % m};
  };

  std::vector<CellSpec> cells;
  CellSpec cap{"cap", 2, {}};
  for (int i = 0; i < k; ++i) {
    cells.push_back({hub(i), 0, {}});
    cells.push_back({"s" + std::to_string(i), 1, {hub(i), hub((i + 1) % k)}});
    for (int a = 0; a < m; ++a) {
      const auto [ni, na] = next_layer(i, a);
      cells.push_back({ij("l", i, a), 0, {}});
      cells.push_back({ij("p", i, a), 1, {hub(i), ij("l", i, a)}});
      cells.push_back({ij("r", i, a), 1, {ij("l", i, a), ij("l", ni, na)}});
      cells.push_back({ij("q", i, a),
                       2,
                       {"s" + std::to_string(i), ij("p", i, a), ij("r", i, a), ij("p", ni, na)}});
      cap.boundary.push_back(ij("r", i, a));
    }
  }
  cells.push_back(std::move(cap));
  return Complex::build(std::move(cells));
}

Complex make_random_even_graph(std::mt19937_64& rng, int vertices) {
  require(vertices >= 3 && vertices <= 64, "random_even in dimension 1 needs 3 <= size <= 64");
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  std::vector<CellSpec> cells;
  for (int v = 1; v <= vertices; ++v) cells.push_back({vertex(v), 0, {}});
  std::map<std::string, int> multiplicity;
  std::set<int> covered;
  const int min_cycles = pick(1, 4);
  int cycles = 0;
  while (static_cast<int>(covered.size()) < vertices || cycles < min_cycles) {
    std::vector<int> pool(static_cast<std::size_t>(vertices));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);

    std::vector<int> walk;
    if (!covered.empty()) {
      auto anchor = covered.begin();
      std::advance(anchor, pick(0, static_cast<int>(covered.size()) - 1));
      walk.push_back(*anchor);
    }
    // Prefer uncovered vertices so the loop terminates.
    std::stable_partition(pool.begin(), pool.end(), [&](int v) { return !covered.contains(v); });
    const int length = pick(2, std::min(vertices, 5));
    for (int v : pool) {
      if (static_cast<int>(walk.size()) == length) break;
      if (std::find(walk.begin(), walk.end(), v) == walk.end()) walk.push_back(v);
    }
    std::shuffle(walk.begin() + (covered.empty() ? 0 : 1), walk.end(), rng);

    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int a = walk[i];
      const int b = walk[(i + 1) % walk.size()];
      const std::string base = edge_between(a, b);
      const int seen = multiplicity[base]++;
      const std::string id = seen == 0 ? base : base + "." + std::to_string(seen);
      cells.push_back({id, 1, {vertex(a), vertex(b)}});
      covered.insert(a);
    }
    ++cycles;
  }
  return Complex::build(std::move(cells));
}

Complex make_random_even_surface(std::mt19937_64& rng, int pieces) {
  require(pieces >= 1 && pieces <= 500, "random_even in dimension 2 needs 1 <= size <= 500");
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  using Triangle = std::array<int, 3>;
  std::set<std::pair<int, int>> edges;
  std::set<Triangle> triangles;
  int next_vertex = 1;

  auto triangle = [](int a, int b, int c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
  };
  // Triangles of a tetrahedron on 4 vertices or of an octahedron whose
  // antipodal pairs are (0,1), (2,3), (4,5).
  auto faces_of = [&](const std::vector<int>& vs) {
    std::vector<Triangle> out;
    if (vs.size() == 4) {
      for (int drop = 0; drop < 4; ++drop) {
        std::vector<int> rest;
        for (int i = 0; i < 4; ++i) {
          if (i != drop) rest.push_back(vs[static_cast<std::size_t>(i)]);
        }
        out.push_back(triangle(rest[0], rest[1], rest[2]));
      }
    } else {
      for (int x = 0; x < 2; ++x) {
        for (int y = 2; y < 4; ++y) {
          for (int z = 4; z < 6; ++z) {
            out.push_back(triangle(vs[static_cast<std::size_t>(x)], vs[static_cast<std::size_t>(y)],
                                   vs[static_cast<std::size_t>(z)]));
          }
        }
      }
    }
    return out;
  };

  for (int piece = 0; piece < pieces; ++piece) {
    const std::size_t count = pick(0, 2) == 0 ? 6 : 4;
    std::vector<int> vs;
    std::vector<Triangle> faces;
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      // Slot 0 and the second shared slot are never antipodal in either layout.
      vs.assign(count, 0);
      if (!edges.empty()) {
        auto shared = edges.begin();
        std::advance(shared, pick(0, static_cast<int>(edges.size()) - 1));
        vs[0] = shared->first;
        vs[count == 4 ? 1 : 2] = shared->second;
      }
      const bool fresh_only = attempt >= 150;
      for (int& slot : vs) {
        if (slot != 0) continue;
        int candidate = 0;
        do {
          candidate = fresh_only ? next_vertex++ : pick(1, next_vertex + static_cast<int>(count));
        } while (std::find(vs.begin(), vs.end(), candidate) != vs.end());
        slot = candidate;
      }
      faces = faces_of(vs);
      placed = std::none_of(faces.begin(), faces.end(),
                            [&](const Triangle& t) { return triangles.contains(t); });
    }
    require(placed, "random_even could not place a circlet");
    for (int v : vs) next_vertex = std::max(next_vertex, v + 1);
    for (const Triangle& t : faces) {
      triangles.insert(t);
      edges.insert({t[0], t[1]});
      edges.insert({t[0], t[2]});
      edges.insert({t[1], t[2]});
    }
  }

  std::vector<CellSpec> cells;
  std::set<int> used;
  for (const auto& [a, b] : edges) {
    used.insert(a);
    used.insert(b);
    cells.push_back({edge_between(a, b), 1, {vertex(a), vertex(b)}});
  }
  for (int v : used) cells.push_back({vertex(v), 0, {}});
  for (const Triangle& t : triangles) {
    cells.push_back({cell_name(2, {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])}),
                     2,
                     {edge_between(t[0], t[1]), edge_between(t[0], t[2]), edge_between(t[1], t[2])}});
  }
  return Complex::build(std::move(cells));
}

Complex make_random_even(const family::RandomEven& spec) {
  require(spec.dim == 1 || spec.dim == 2, "random_even supports dimension 1 or 2");
  std::mt19937_64 rng(spec.seed);
  return spec.dim == 1 ? make_random_even_graph(rng, spec.size)
                       : make_random_even_surface(rng, spec.size);
}

}  // namespace

Complex generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, family::Cycle>) return make_cycle(s);
        else if constexpr (std::is_same_v<T, family::TriangularGrid>) return make_triangular_grid(s);
        else if constexpr (std::is_same_v<T, family::SimplexSkeleton>) return make_simplex_skeleton(s);
        else if constexpr (std::is_same_v<T, family::HypercubeSkeleton>) return make_hypercube_skeleton(s);
        else if constexpr (std::is_same_v<T, family::CrossPolytopeSkeleton>)
          return make_crosspolytope_skeleton(s);
        else if constexpr (std::is_same_v<T, family::FinnedCirclet>) return make_finned_circlet(s);
        else return make_random_even(s);
      },
      spec);
}

FamilySpec family_from_args(std::string_view name, std::span<const long long> params) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(params.size() >= lo && params.size() <= hi,
            std::string(name) + " expects " + std::to_string(lo) +
                (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
  };
  auto as_int = [&](std::size_t i) {
    require(params[i] >= -1000000000LL && params[i] <= 1000000000LL, "parameter out of range");
    return static_cast<int>(params[i]);
  };
  if (name == "cycle") {
    arity(1, 1);
    return family::Cycle{as_int(0)};
  }
  if (name == "triangular_grid") {
    arity(1, 1);
    return family::TriangularGrid{as_int(0)};
  }
  if (name == "simplex_skeleton") {
    arity(2, 2);
    return family::SimplexSkeleton{as_int(0), as_int(1)};
  }
  if (name == "hypercube_skeleton") {
    arity(2, 2);
    return family::HypercubeSkeleton{as_int(0), as_int(1)};
  }
  if (name == "crosspolytope_skeleton") {
    arity(2, 2);
    return family::CrossPolytopeSkeleton{as_int(0), as_int(1)};
  }
  if (name == "finned_circlet") {
    arity(2, 2);
    return family::FinnedCirclet{as_int(0), as_int(1)};
  }
  if (name == "random_even") {
    arity(2, 3);
    require(params[0] >= 0, "seed must be non-negative");
    return family::RandomEven{static_cast<std::uint64_t>(params[0]), as_int(1),
                              params.size() == 3 ? as_int(2) : 2};
  }
  throw Error(ErrorCode::BadParameters, "unknown family '" + std::string(name) + "'");
}

}  // namespace eulercw
