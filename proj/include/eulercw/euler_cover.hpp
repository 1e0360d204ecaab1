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
#include <map>
#include <utility>
#include <vector>

#include "eulercw/complex.hpp"

namespace eulercw {

/// Unordered facet pair, stored with first < second.
struct FacetPair {
  CellId first;
  CellId second;

  static FacetPair of(CellId a, CellId b);
  bool contains(std::string_view f) const { return first == f || second == f; }
  const CellId& other(std::string_view f) const { return first == f ? second : first; }

  bool operator==(const FacetPair&) const = default;
};

/// For every side s, an ordered partition of the facets containing s into
/// unordered pairs. Position j (1-based) in that list is the copy index of
/// the side copy that glues the pair together.
class Gluing {
 public:
  Gluing() = default;
  explicit Gluing(std::map<CellId, std::vector<FacetPair>> pairs) : pairs_(std::move(pairs)) {}

  const std::map<CellId, std::vector<FacetPair>>& pairs() const noexcept { return pairs_; }
  const std::vector<FacetPair>& pairs_at(std::string_view side) const;

  /// r_s, the number of pairs at a side.
  std::size_t pair_count(std::string_view side) const { return pairs_at(side).size(); }
  std::size_t total_pairs() const;

  /// The facet glued to `facet` across `side`.
  const CellId& partner(std::string_view side, std::string_view facet) const;
  /// 1-based index of the pair containing `facet` at `side`.
  int index(std::string_view side, std::string_view facet) const;

  bool operator==(const Gluing&) const = default;

 private:
  std::map<CellId, std::vector<FacetPair>> pairs_;
};

struct Strategy {
  enum class Kind { canonical, seeded };
  Kind kind = Kind::canonical;
  std::uint64_t seed = 0;

  static Strategy canonical() { return {}; }
  static Strategy seeded(std::uint64_t seed) { return {Kind::seeded, seed}; }
};

/// Id of the j-th copy of a side ("s#j") and of a re-attached facet ("f^").
CellId side_copy_id(std::string_view side, int j);
CellId facet_hat_id(std::string_view facet);

struct SideCopy {
  CellId side;
  int index = 0;
};

struct GluedComplex {
  Complex complex;
  std::map<CellId, SideCopy> side_copies;  // copy id -> (side, j)
  std::map<CellId, CellId> facet_origin;   // hat id -> facet of K
};

/// Cell-level map from a pseudomanifold onto the complex it covers.
struct CoverMap {
  Complex source;
  Complex target;
  std::map<CellId, CellId> cell_map;  // source id -> target id

  /// Throws InvalidCover for cells outside the map.
  const CellId& image(std::string_view source_cell) const;
};

/// Throws NotEven (also for non-pure or zero-dimensional input).
Gluing canonical_gluing(const Complex& k, Strategy strategy = Strategy::canonical());

struct GluedCover {
  GluedComplex glued;
  CoverMap cover;
};

/// Keeps K^(n-2), replaces each side s by r_s copies, and re-attaches each
/// facet to the copies selected by the gluing. Throws GluingMismatch.
GluedCover build_glued_complex(const Complex& k, const Gluing& g);

/// Throws NotEven or NotCirclet.
CoverMap cover_circlet(const Complex& circlet, Strategy strategy = Strategy::canonical());

/// Combines covers of facet-disjoint L and C into a cover of L u C by
/// recombining the first pairs at `side`. Throws NoSharedSide,
/// NotFacetDisjoint or InvalidCover.
CoverMap merge_covers(const CoverMap& cover_l, const CoverMap& cover_c, std::string_view side);

/// Same, choosing the smallest shared side id.
CoverMap merge_covers(const CoverMap& cover_l, const CoverMap& cover_c);

/// Euler cover of a pure, strongly connected, even complex.
/// Throws NotPure, NotEven, NotStronglyConnected or ZeroDimensional.
CoverMap euler_cover(const Complex& k, Strategy strategy = Strategy::canonical());

/// The gluing read back off a verified cover. Throws InvalidCover.
Gluing gluing_from_cover(const CoverMap& cover);

/// Independent checks (a)-(h) of an Euler cover; rule names are
/// source_pure, side_degree_two, source_strongly_connected,
/// lower_skeleton_identity, facet_bijection, cellular_map,
/// side_preimage_count and corner_link_two_regular.
ValidationReport verify_cover(const CoverMap& cover);

/// Cyclic order of all sides in which consecutive sides share a facet.
/// Throws NotPseudomanifold, DualNotSimple or OddFacet.
std::vector<CellId> side_tour(const Complex& m);

}  // namespace eulercw
