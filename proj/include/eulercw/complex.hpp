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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eulercw/error.hpp"

namespace eulercw {

/// User-supplied cell identifier. Ordering is plain lexicographic.
using CellId = std::string;

/// Position of a cell inside a Complex. Cells are stored sorted by (dim, id),
/// so within one dimension index order equals id order.
using CellIndex = std::size_t;

/// A set of facet ids, always iterated in id order.
using FacetSet = std::set<CellId>;

/// Raw cell description as read from a file or produced by a generator.
struct CellSpec {
  CellId id;
  int dim = 0;
  std::vector<CellId> boundary;

  bool operator==(const CellSpec&) const = default;
};

struct Cell {
  CellId id;
  int dim = 0;
  std::vector<CellIndex> boundary;    // (dim-1)-cells, in id order
  std::vector<CellIndex> coboundary;  // (dim+1)-cells covering this one
};

/// Immutable face poset of a finite regular CW-complex.
///
/// Only the covering relation is stored. Anything deeper (closures, skeleta,
/// induced subcomplexes) is derived from it on request. Construction checks
/// closure under boundary and the dimension rules; the diamond property and
/// the boundary-sphere conditions are left to validate_regularity().
class Complex {
 public:
  Complex() = default;

  /// Throws Error with DuplicateId, DanglingReference, BadDimension,
  /// NonRegularEdge or EmptyBoundary.
  static Complex build(std::vector<CellSpec> cells);

  /// Highest cell dimension; 0 for the empty complex.
  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  const Cell& cell(CellIndex i) const { return cells_.at(i); }
  const CellId& id(CellIndex i) const { return cells_.at(i).id; }
  std::optional<CellIndex> find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }
  /// Throws Error(UnknownFacet) when the id is missing.
  CellIndex index_of(std::string_view id) const;

  /// K^(r): all r-cells in id order. Empty span when r is out of range.
  std::span<const CellIndex> cells_of_dim(int r) const;
  std::span<const CellIndex> facets() const { return cells_of_dim(dimension_); }
  std::span<const CellIndex> sides() const { return cells_of_dim(dimension_ - 1); }

  bool is_pure() const noexcept { return pure_; }

  /// Every cell below (and including) the given cells, as a membership mask.
  std::vector<bool> closure_mask(std::span<const CellIndex> roots) const;
  /// Cells of dimension r lying in the closure of `cell`.
  std::vector<CellIndex> faces_of_dim(CellIndex cell, int r) const;

  /// Cells as specs, sorted by (dim, id) with boundaries sorted by id.
  std::vector<CellSpec> specs() const;

  bool operator==(const Complex& other) const { return specs() == other.specs(); }

 private:
  std::vector<Cell> cells_;
  std::unordered_map<CellId, CellIndex> index_;
  std::vector<std::vector<CellIndex>> by_dim_;
  int dimension_ = 0;
  bool pure_ = true;
};

inline Complex build_complex(std::vector<CellSpec> cells) {
  return Complex::build(std::move(cells));
}

struct Violation {
  std::string rule;
  std::vector<CellId> cells;
  std::string message;
};

struct ValidationReport {
  std::string scope;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Poset-checkable necessary conditions for regularity: the diamond property
/// and, for each cell of dimension >= 2, a boundary that is a strongly
/// connected pseudomanifold. Passing does not prove the boundaries are
/// spheres.
ValidationReport validate_regularity(const Complex& k);

/// Throws RankOutOfRange unless 0 <= r <= dimension.
Complex skeleton(const Complex& k, int r);

/// K(S). Throws EmptyFacetSet or NotAFacet.
Complex induced_subcomplex(const Complex& k, const FacetSet& facets);

struct DegreeProfile {
  std::map<CellId, int> degrees;
  bool is_pure = false;
  bool is_even = false;
};

/// Throws ZeroDimensional for n = 0.
DegreeProfile degree_profile(const Complex& k);

struct DualEdge {
  CellId a;  // a < b
  CellId b;
  CellId side;

  bool operator==(const DualEdge&) const = default;
};

struct DualMultigraph {
  std::vector<CellId> vertices;
  std::vector<DualEdge> edges;
};

/// Facets as vertices; one edge per facet pair per shared side, ordered by
/// (side, a, b). Throws NotPure or ZeroDimensional.
DualMultigraph dual_multigraph(const Complex& k);

/// The link multigraph at a corner: facets containing `corner`, joined once
/// for every side through the corner that both contain.
DualMultigraph corner_link(const Complex& k, std::string_view corner);

/// Connected components of K*, each in id order, listed by smallest member.
std::vector<FacetSet> strong_components(const Complex& k);

bool is_strongly_connected(const Complex& k);
bool is_pseudomanifold(const Complex& k);

/// Cut edges of a multigraph, in edge order. Parallel edges never qualify.
std::vector<DualEdge> bridges(const DualMultigraph& g);

long euler_characteristic(const Complex& k);

/// Union of two complexes whose shared ids denote identical cells.
/// Throws GluingMismatch when a shared id disagrees.
Complex complex_union(const Complex& a, const Complex& b);

}  // namespace eulercw
