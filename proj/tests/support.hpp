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

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's algorithms: evenness is counted side by
// side, components come from a boolean transitive closure, bridges from edge
// deletion, and Euler circuits from a separate Hierholzer walk.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eulercw/complex.hpp"
#include "eulercw/error.hpp"
#include "eulercw/generators.hpp"

namespace eulercw::testing {

/// Error code raised by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Complex delta5_2() { return generate(family::SimplexSkeleton{6, 2}); }
inline Complex delta4_2() { return generate(family::SimplexSkeleton{5, 2}); }
inline Complex tetrahedron() { return generate(family::SimplexSkeleton{4, 2}); }
inline Complex octahedron() { return generate(family::CrossPolytopeSkeleton{3, 2}); }
inline Complex cube() { return generate(family::HypercubeSkeleton{3, 2}); }
inline Complex cycle(int n) { return generate(family::Cycle{n}); }
inline Complex finned(int k, int m) { return generate(family::FinnedCirclet{k, m}); }
inline Complex grid() { return generate(family::TriangularGrid{3}); }

inline Complex single_triangle() { return generate(family::SimplexSkeleton{3, 2}); }

// Tetrahedron boundary on the given four vertex labels, ids in the simplex
// generator's scheme.
inline std::vector<CellSpec> tetra_cells(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::vector<CellSpec> cells;
  auto vid = [](int a) { return "v" + std::to_string(a); };
  auto eid = [](int a, int b) { return "e" + std::to_string(a) + "-" + std::to_string(b); };
  for (int a : v) cells.push_back({vid(a), 0, {}});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) cells.push_back({eid(v[i], v[j]), 1, {vid(v[i]), vid(v[j])}});
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        cells.push_back({"f" + std::to_string(v[i]) + "-" + std::to_string(v[j]) + "-" + std::to_string(v[k]),
                         2,
                         {eid(v[i], v[j]), eid(v[i], v[k]), eid(v[j], v[k])}});
      }
    }
  }
  return cells;
}

inline Complex tetra_on(std::vector<int> v) { return Complex::build(tetra_cells(std::move(v))); }

/// Cycle through the given vertex labels: vertices v{a}, edges e{a}-{b}.
inline Complex cycle_on(const std::vector<int>& v) {
  std::vector<CellSpec> cells;
  for (int a : v) cells.push_back({"v" + std::to_string(a), 0, {}});
  for (std::size_t i = 0; i < v.size(); ++i) {
    int a = v[i], b = v[(i + 1) % v.size()];
    if (b < a) std::swap(a, b);
    cells.push_back({"e" + std::to_string(a) + "-" + std::to_string(b), 1,
                     {"v" + std::to_string(a), "v" + std::to_string(b)}});
  }
  return Complex::build(std::move(cells));
}

/// Named even, strongly connected complexes shared by the property tests.
inline std::vector<std::pair<std::string, Complex>> corpus() {
  std::vector<std::pair<std::string, Complex>> out;
  out.emplace_back("delta5_2", delta5_2());
  out.emplace_back("tetrahedron", tetrahedron());
  out.emplace_back("octahedron", octahedron());
  out.emplace_back("cube", cube());
  out.emplace_back("cycle6", cycle(6));
  out.emplace_back("grid3", grid());
  out.emplace_back("finned_3_4", finned(3, 4));
  out.emplace_back("finned_3_6", finned(3, 6));
  out.emplace_back("two_tetra", complex_union(tetra_on({1, 2, 3, 4}), tetra_on({1, 2, 5, 6})));
  out.emplace_back("random_even_1_3", generate(family::RandomEven{1, 3, 2}));
  out.emplace_back("random_graph_7_8", generate(family::RandomEven{7, 8, 1}));
  return out;
}

inline std::vector<CellId> facet_list(const Complex& k) {
  std::vector<CellId> out;
  for (CellIndex f : k.facets()) out.push_back(k.id(f));
  return out;
}

inline FacetSet all_facets(const Complex& k) {
  const auto list = facet_list(k);
  return {list.begin(), list.end()};
}

// ---- evenness by direct counting -------------------------------------------

/// side id -> facets (by position in facet_list) whose boundary holds it.
inline std::map<CellId, std::vector<std::size_t>> side_incidence(const Complex& k) {
  std::map<CellId, std::vector<std::size_t>> out;
  const auto facets = k.facets();
  for (std::size_t p = 0; p < facets.size(); ++p) {
    for (CellIndex s : k.cell(facets[p]).boundary) out[k.id(s)].push_back(p);
  }
  return out;
}

/// Facet subsets encoded as bit masks over facet_list positions.
inline bool mask_is_even(const std::map<CellId, std::vector<std::size_t>>& incidence,
                         std::uint64_t mask) {
  if (mask == 0) return false;
  for (const auto& [side, facets] : incidence) {
    int degree = 0;
    for (std::size_t p : facets) degree += static_cast<int>((mask >> p) & 1U);
    if (degree % 2 != 0) return false;
  }
  return true;
}

/// All minimal even facet subsets, by exhaustive enumeration (<= 24 facets).
inline std::vector<std::uint64_t> brute_minimal_even(const Complex& k) {
  const auto incidence = side_incidence(k);
  const std::size_t n = k.facets().size();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask_is_even(incidence, mask)) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  // Every even set contains a minimal one, so comparing against the minimal
  // sets found so far is enough.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t mask : masks) {
    const bool has_smaller = std::any_of(minimal.begin(), minimal.end(),
                                         [mask](std::uint64_t m) { return (m & mask) == m; });
    if (!has_smaller) minimal.push_back(mask);
  }
  return minimal;
}

inline std::uint64_t mask_of(const Complex& k, const FacetSet& s) {
  const auto list = facet_list(k);
  std::uint64_t mask = 0;
  for (const CellId& f : s) {
    const auto pos = std::find(list.begin(), list.end(), f) - list.begin();
    mask |= std::uint64_t{1} << pos;
  }
  return mask;
}

inline FacetSet set_of(const Complex& k, std::uint64_t mask) {
  const auto list = facet_list(k);
  FacetSet out;
  for (std::size_t p = 0; p < list.size(); ++p) {
    if ((mask >> p) & 1U) out.insert(list[p]);
  }
  return out;
}

/// Minimal-even check on one subset by enumerating all its proper subsets.
inline bool brute_is_minimal_even(const Complex& k, const FacetSet& s) {
  const auto incidence = side_incidence(k);
  const std::uint64_t mask = mask_of(k, s);
  if (!mask_is_even(incidence, mask)) return false;
  for (std::uint64_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
    if (mask_is_even(incidence, sub)) return false;
  }
  return true;
}

// ---- connectivity ----------------------------------------------------------

/// Strong components via Warshall's transitive closure over facets.
inline std::vector<FacetSet> brute_components(const Complex& k) {
  const auto list = facet_list(k);
  const std::size_t n = list.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [side, facets] : side_incidence(k)) {
    for (std::size_t a : facets) {
      for (std::size_t b : facets) reach[a][b] = true;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][m]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[m][j]) reach[i][j] = true;
      }
    }
  }
  std::set<FacetSet> groups;
  for (std::size_t i = 0; i < n; ++i) {
    FacetSet g;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) g.insert(list[j]);
    }
    groups.insert(g);
  }
  std::vector<FacetSet> out(groups.begin(), groups.end());
  std::sort(out.begin(), out.end(),
            [](const FacetSet& a, const FacetSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

inline std::size_t count_components(const std::vector<std::string>& vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::string> parent;
  for (const auto& v : vertices) parent[v] = v;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  std::set<std::string> roots;
  for (const auto& v : vertices) roots.insert(find(v));
  return roots.size();
}

/// Indices of edges whose removal increases the component count.
inline std::vector<std::size_t> brute_bridges(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  const std::size_t base = count_components(vertices, edges);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
    if (count_components(vertices, rest) > base) out.push_back(e);
  }
  return out;
}

// ---- one-dimensional oracles ----------------------------------------------

/// Closed trail found by Hierholzer's algorithm on the 1-skeleton of an even
/// connected multigraph; returns the edge ids in walk order.
inline std::vector<CellId> hierholzer_circuit(const Complex& g) {
  std::map<CellId, std::vector<std::pair<CellId, CellId>>> adj;  // vertex -> (edge, other)
  for (CellIndex e : g.cells_of_dim(1)) {
    const auto& b = g.cell(e).boundary;
    adj[g.id(b[0])].push_back({g.id(e), g.id(b[1])});
    adj[g.id(b[1])].push_back({g.id(e), g.id(b[0])});
  }
  std::set<CellId> used;
  std::vector<std::pair<CellId, CellId>> stack{{adj.begin()->first, ""}};
  std::vector<CellId> circuit;
  while (!stack.empty()) {
    auto& [v, via] = stack.back();
    auto& list = adj[v];
    while (!list.empty() && used.contains(list.back().first)) list.pop_back();
    if (list.empty()) {
      if (!via.empty()) circuit.push_back(via);
      stack.pop_back();
    } else {
      auto [e, w] = list.back();
      used.insert(e);
      stack.push_back({w, e});
    }
  }
  return circuit;
}

/// A 1-complex that is one simple cycle: every vertex of degree 2, connected.
inline bool is_single_cycle(const Complex& m) {
  if (m.dimension() != 1) return false;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (CellIndex v : m.cells_of_dim(0)) {
    if (m.cell(v).coboundary.size() != 2) return false;
    vertices.push_back(m.id(v));
  }
  for (CellIndex e : m.cells_of_dim(1)) {
    edges.push_back({m.id(m.cell(e).boundary[0]), m.id(m.cell(e).boundary[1])});
  }
  return count_components(vertices, edges) == 1;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace eulercw::testing
