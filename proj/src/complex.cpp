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

#include "eulercw/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace eulercw {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NonRegularEdge: return "NonRegularEdge";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::EmptyFacetSet: return "EmptyFacetSet";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::UnknownFacet: return "UnknownFacet";
    case ErrorCode::GluingMismatch: return "GluingMismatch";
    case ErrorCode::ZeroDimensional: return "ZeroDimensional";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotCirclet: return "NotCirclet";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NoSharedSide: return "NoSharedSide";
    case ErrorCode::NotFacetDisjoint: return "NotFacetDisjoint";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::DualNotSimple: return "DualNotSimple";
    case ErrorCode::OddFacet: return "OddFacet";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  return static_cast<int>(code) < static_cast<int>(ErrorCode::ZeroDimensional);
}

namespace {

void require_analysable(const Complex& k) {
  if (k.dimension() == 0) {
    throw Error(ErrorCode::ZeroDimensional, "analysis requires dimension >= 1");
  }
}

void require_pure(const Complex& k) {
  require_analysable(k);
  if (!k.is_pure()) throw Error(ErrorCode::NotPure, "complex is not pure");
}

// Minimal union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Complex Complex::build(std::vector<CellSpec> cells) {
  std::sort(cells.begin(), cells.end(), [](const CellSpec& a, const CellSpec& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
  });

  Complex k;
  k.cells_.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].dim < 0) {
      throw Error(ErrorCode::BadDimension, "cell '" + cells[i].id + "' has negative dimension");
    }
    auto [it, inserted] = k.index_.emplace(cells[i].id, i);
    if (!inserted) throw Error(ErrorCode::DuplicateId, "duplicate cell id '" + cells[i].id + "'");
    k.dimension_ = std::max(k.dimension_, cells[i].dim);
  }

  k.by_dim_.assign(static_cast<std::size_t>(k.dimension_) + 1, {});
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellSpec& spec = cells[i];
    Cell cell{spec.id, spec.dim, {}, {}};
    for (const CellId& b : spec.boundary) {
      auto found = k.index_.find(b);
      if (found == k.index_.end()) {
        throw Error(ErrorCode::DanglingReference,
                    "cell '" + spec.id + "' references missing cell '" + b + "'");
      }
      if (cells[found->second].dim != spec.dim - 1) {
        throw Error(ErrorCode::BadDimension, "boundary cell '" + b + "' of '" + spec.id +
                                                 "' does not have dimension " +
                                                 std::to_string(spec.dim - 1));
      }
      cell.boundary.push_back(found->second);
    }
    std::sort(cell.boundary.begin(), cell.boundary.end());
    const bool repeated =
        std::adjacent_find(cell.boundary.begin(), cell.boundary.end()) != cell.boundary.end();
    if (spec.dim == 1 && (cell.boundary.size() != 2 || repeated)) {
      throw Error(ErrorCode::NonRegularEdge,
                  "edge '" + spec.id + "' needs exactly two distinct endpoints");
    }
    if (spec.dim >= 1 && cell.boundary.empty()) {
      throw Error(ErrorCode::EmptyBoundary, "cell '" + spec.id + "' has an empty boundary");
    }
    cell.boundary.erase(std::unique(cell.boundary.begin(), cell.boundary.end()),
                        cell.boundary.end());
    k.by_dim_[static_cast<std::size_t>(spec.dim)].push_back(i);
    k.cells_.push_back(std::move(cell));
  }

  for (CellIndex i = 0; i < k.cells_.size(); ++i) {
    for (CellIndex b : k.cells_[i].boundary) k.cells_[b].coboundary.push_back(i);
  }

  if (!k.cells_.empty()) {
    const auto top = k.facets();
    const auto mask = k.closure_mask(top);
    k.pure_ = std::all_of(mask.begin(), mask.end(), [](bool v) { return v; });
  }
  return k;
}

std::optional<CellIndex> Complex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellIndex Complex::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownFacet, "unknown cell '" + std::string(id) + "'");
}

std::span<const CellIndex> Complex::cells_of_dim(int r) const {
  if (r < 0 || static_cast<std::size_t>(r) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(r)];
}

std::vector<bool> Complex::closure_mask(std::span<const CellIndex> roots) const {
  std::vector<bool> mask(cells_.size(), false);
  std::vector<CellIndex> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    CellIndex c = stack.back();
    stack.pop_back();
    if (mask[c]) continue;
    mask[c] = true;
    for (CellIndex b : cells_[c].boundary) {
      if (!mask[b]) stack.push_back(b);
    }
  }
  return mask;
}

std::vector<CellIndex> Complex::faces_of_dim(CellIndex cell, int r) const {
  const CellIndex root[] = {cell};
  const auto mask = closure_mask(root);
  std::vector<CellIndex> out;
  for (CellIndex c : cells_of_dim(r)) {
    if (mask[c]) out.push_back(c);
  }
  return out;
}

std::vector<CellSpec> Complex::specs() const {
  std::vector<CellSpec> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) {
    CellSpec spec{c.id, c.dim, {}};
    for (CellIndex b : c.boundary) spec.boundary.push_back(cells_[b].id);
    out.push_back(std::move(spec));
  }
  return out;
}

ValidationReport validate_regularity(const Complex& k) {
  ValidationReport report;
  report.scope = "necessary-conditions-only";

  for (int r = 2; r <= k.dimension(); ++r) {
    for (CellIndex top : k.cells_of_dim(r)) {
      const Cell& cell = k.cell(top);
      std::map<CellIndex, std::vector<CellIndex>> walls_through;
      for (CellIndex wall : cell.boundary) {
        for (CellIndex low : k.cell(wall).boundary) walls_through[low].push_back(wall);
      }

      for (const auto& [low, walls] : walls_through) {
        if (walls.size() == 2) continue;
        Violation v{"diamond", {cell.id, k.id(low)}, {}};
        v.message = "cell '" + k.id(low) + "' lies in " + std::to_string(walls.size()) +
                    " boundary cells of '" + cell.id + "', expected 2";
        report.violations.push_back(std::move(v));
      }

      // Boundary walls must form one strong component.
      std::map<CellIndex, std::size_t> slot;
      for (CellIndex wall : cell.boundary) slot.emplace(wall, slot.size());
      DisjointSets sets(slot.size());
      for (const auto& [low, walls] : walls_through) {
        for (std::size_t i = 1; i < walls.size(); ++i) sets.unite(slot[walls[0]], slot[walls[i]]);
      }
      std::set<std::size_t> roots;
      for (std::size_t i = 0; i < slot.size(); ++i) roots.insert(sets.find(i));
      if (roots.size() > 1) {
        report.violations.push_back({"boundary_connected",
                                     {cell.id},
                                     "boundary of '" + cell.id + "' splits into " +
                                         std::to_string(roots.size()) + " strong components"});
      }
    }
  }
  return report;
}

Complex skeleton(const Complex& k, int r) {
  if (r < 0 || r > k.dimension()) {
    throw Error(ErrorCode::RankOutOfRange,
                "skeleton rank " + std::to_string(r) + " outside [0, " +
                    std::to_string(k.dimension()) + "]");
  }
  auto specs = k.specs();
  std::erase_if(specs, [r](const CellSpec& s) { return s.dim > r; });
  return Complex::build(std::move(specs));
}

Complex induced_subcomplex(const Complex& k, const FacetSet& facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyFacetSet, "facet set is empty");
  std::vector<CellIndex> roots;
  for (const CellId& f : facets) {
    auto i = k.find(f);
    if (!i || k.cell(*i).dim != k.dimension()) {
      throw Error(ErrorCode::NotAFacet, "'" + f + "' is not a facet");
    }
    roots.push_back(*i);
  }
  const auto mask = k.closure_mask(roots);
  auto specs = k.specs();
  std::vector<CellSpec> kept;
  for (CellIndex i = 0; i < specs.size(); ++i) {
    if (mask[i]) kept.push_back(std::move(specs[i]));
  }
  return Complex::build(std::move(kept));
}

DegreeProfile degree_profile(const Complex& k) {
  require_analysable(k);
  DegreeProfile profile;
  profile.is_pure = k.is_pure();
  bool all_even = true;
  for (CellIndex s : k.sides()) {
    const int d = static_cast<int>(k.cell(s).coboundary.size());
    profile.degrees.emplace(k.id(s), d);
    if (d == 0 || d % 2 != 0) all_even = false;
  }
  profile.is_even = profile.is_pure && all_even;
  return profile;
}

DualMultigraph dual_multigraph(const Complex& k) {
  require_pure(k);
  DualMultigraph g;
  for (CellIndex f : k.facets()) g.vertices.push_back(k.id(f));
  for (CellIndex s : k.sides()) {
    const auto& cob = k.cell(s).coboundary;
    for (std::size_t i = 0; i < cob.size(); ++i) {
      for (std::size_t j = i + 1; j < cob.size(); ++j) {
        g.edges.push_back({k.id(cob[i]), k.id(cob[j]), k.id(s)});
      }
    }
  }
  return g;
}

DualMultigraph corner_link(const Complex& k, std::string_view corner) {
  auto c = k.find(corner);
  if (!c || k.cell(*c).dim != k.dimension() - 2) {
    throw Error(ErrorCode::BadParameters, "'" + std::string(corner) + "' is not a corner");
  }
  std::set<CellIndex> around;
  DualMultigraph g;
  for (CellIndex s : k.cell(*c).coboundary) {
    const auto& cob = k.cell(s).coboundary;
    around.insert(cob.begin(), cob.end());
    for (std::size_t i = 0; i < cob.size(); ++i) {
      for (std::size_t j = i + 1; j < cob.size(); ++j) {
        g.edges.push_back({k.id(cob[i]), k.id(cob[j]), k.id(s)});
      }
    }
  }
  for (CellIndex f : around) g.vertices.push_back(k.id(f));
  return g;
}

std::vector<FacetSet> strong_components(const Complex& k) {
  require_pure(k);
  const auto facets = k.facets();
  const CellIndex first = facets.empty() ? 0 : facets.front();
  DisjointSets sets(facets.size());
  for (CellIndex s : k.sides()) {
    const auto& cob = k.cell(s).coboundary;
    for (std::size_t i = 1; i < cob.size(); ++i) sets.unite(cob[0] - first, cob[i] - first);
  }
  // Roots are the smallest member, so iterating in id order lists components
  // by their smallest facet.
  std::map<std::size_t, FacetSet> groups;
  for (CellIndex f : facets) groups[sets.find(f - first)].insert(k.id(f));
  std::vector<FacetSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_strongly_connected(const Complex& k) { return strong_components(k).size() == 1; }

bool is_pseudomanifold(const Complex& k) {
  if (k.dimension() == 0 || !k.is_pure()) return false;
  for (CellIndex s : k.sides()) {
    if (k.cell(s).coboundary.size() != 2) return false;
  }
  return is_strongly_connected(k);
}

std::vector<DualEdge> bridges(const DualMultigraph& g) {
  std::unordered_map<CellId, std::size_t> slot;
  for (const CellId& v : g.vertices) slot.emplace(v, slot.size());
  struct Arc {
    std::size_t to;
    std::size_t edge;
  };
  std::vector<std::vector<Arc>> adj(slot.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto a = slot.find(g.edges[e].a);
    auto b = slot.find(g.edges[e].b);
    if (a == slot.end() || b == slot.end()) {
      throw Error(ErrorCode::BadParameters, "edge endpoint is not a vertex of the multigraph");
    }
    if (a->second == b->second) continue;
    adj[a->second].push_back({b->second, e});
    adj[b->second].push_back({a->second, e});
  }

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> discovery(adj.size(), unvisited);
  std::vector<std::size_t> low(adj.size(), 0);
  std::vector<bool> is_bridge(g.edges.size(), false);
  std::size_t clock = 0;

  // Skipping the entry edge by id rather than by parent vertex keeps parallel
  // edges from ever being reported.
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t via) {
    discovery[v] = low[v] = clock++;
    for (const Arc& arc : adj[v]) {
      if (arc.edge == via) continue;
      if (discovery[arc.to] == unvisited) {
        dfs(arc.to, arc.edge);
        low[v] = std::min(low[v], low[arc.to]);
        if (low[arc.to] > discovery[v]) is_bridge[arc.edge] = true;
      } else {
        low[v] = std::min(low[v], discovery[arc.to]);
      }
    }
  };
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (discovery[v] == unvisited) dfs(v, unvisited);
  }

  std::vector<DualEdge> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (is_bridge[e]) out.push_back(g.edges[e]);
  }
  return out;
}

long euler_characteristic(const Complex& k) {
  long chi = 0;
  for (int r = 0; r <= k.dimension(); ++r) {
    const long count = static_cast<long>(k.cells_of_dim(r).size());
    chi += (r % 2 == 0) ? count : -count;
  }
  return chi;
}

Complex complex_union(const Complex& a, const Complex& b) {
  std::map<CellId, CellSpec> merged;
  for (auto& spec : a.specs()) merged.emplace(spec.id, std::move(spec));
  for (auto& spec : b.specs()) {
    auto [it, inserted] = merged.emplace(spec.id, spec);
    if (!inserted && !(it->second == spec)) {
      throw Error(ErrorCode::GluingMismatch, "cell '" + spec.id + "' differs between complexes");
    }
  }
  std::vector<CellSpec> cells;
  cells.reserve(merged.size());
  for (auto& [id, spec] : merged) cells.push_back(std::move(spec));
  return Complex::build(std::move(cells));
}

}  // namespace eulercw
