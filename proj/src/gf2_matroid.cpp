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

#include "eulercw/gf2_matroid.hpp"

#include <algorithm>
#include <bit>

namespace eulercw {

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::lowest() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return bits_;
}

std::size_t IncidenceMatrixGF2::row_weight(std::size_t i) const {
  std::size_t n = 0;
  for (const BitVector& col : support_) n += col.test(i) ? 1 : 0;
  return n;
}

std::size_t IncidenceMatrixGF2::column_index(std::string_view facet) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), facet);
  if (it == columns_.end() || *it != facet) {
    throw Error(ErrorCode::UnknownFacet, "unknown facet '" + std::string(facet) + "'");
  }
  return static_cast<std::size_t>(it - columns_.begin());
}

IncidenceMatrixGF2 incidence_matrix(const Complex& k) {
  if (k.dimension() == 0) {
    throw Error(ErrorCode::ZeroDimensional, "analysis requires dimension >= 1");
  }
  if (!k.is_pure()) throw Error(ErrorCode::NotPure, "complex is not pure");

  IncidenceMatrixGF2 m;
  const auto sides = k.sides();
  const CellIndex first_side = sides.empty() ? 0 : sides.front();
  for (CellIndex s : sides) m.rows_.push_back(k.id(s));
  for (CellIndex f : k.facets()) {
    m.columns_.push_back(k.id(f));
    BitVector col(sides.size());
    for (CellIndex s : k.cell(f).boundary) col.set(s - first_side);
    m.support_.push_back(std::move(col));
  }
  return m;
}

namespace {

std::vector<std::size_t> columns_of(const IncidenceMatrixGF2& m, const FacetSet& s) {
  std::vector<std::size_t> cols;
  cols.reserve(s.size());
  for (const CellId& f : s) cols.push_back(m.column_index(f));
  return cols;
}

// Incremental column echelon form. Each stored vector is reduced against all
// earlier ones, so reducing a new column in insertion order clears every
// pivot row.
class ColumnEliminator {
 public:
  explicit ColumnEliminator(std::size_t width) : width_(width) {}

  /// Adds a column tagged with position `pos`. Returns the positions of a
  /// dependency when the column reduces to zero.
  std::optional<BitVector> add(BitVector v, std::size_t pos) {
    BitVector combo(width_);
    combo.set(pos);
    for (const Entry& e : basis_) {
      if (v.test(e.pivot)) {
        v ^= e.vector;
        combo ^= e.combo;
      }
    }
    if (v.none()) return combo;
    const std::size_t pivot = v.lowest();
    basis_.push_back({std::move(v), pivot, std::move(combo)});
    return std::nullopt;
  }

  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  struct Entry {
    BitVector vector;
    std::size_t pivot;
    BitVector combo;
  };
  std::size_t width_;
  std::vector<Entry> basis_;
};

}  // namespace

bool is_even_subset(const IncidenceMatrixGF2& m, const FacetSet& s) {
  const auto cols = columns_of(m, s);
  if (cols.empty()) return false;
  BitVector sum(m.row_ids().size());
  for (std::size_t c : cols) sum ^= m.column(c);
  return sum.none();
}

std::optional<FacetSet> find_even_subset(const IncidenceMatrixGF2& m, const FacetSet& s) {
  const auto cols = columns_of(m, s);
  ColumnEliminator elim(cols.size());
  for (std::size_t pos = 0; pos < cols.size(); ++pos) {
    if (auto combo = elim.add(m.column(cols[pos]), pos)) {
      FacetSet out;
      for (std::size_t p = 0; p < cols.size(); ++p) {
        if (combo->test(p)) out.insert(m.column_ids()[cols[p]]);
      }
      return out;
    }
  }
  return std::nullopt;
}

std::size_t column_rank(const IncidenceMatrixGF2& m, const FacetSet& s) {
  const auto cols = columns_of(m, s);
  ColumnEliminator elim(cols.size());
  for (std::size_t pos = 0; pos < cols.size(); ++pos) elim.add(m.column(cols[pos]), pos);
  return elim.rank();
}

bool is_circlet_subset(const IncidenceMatrixGF2& m, const FacetSet& s) {
  return is_even_subset(m, s) && column_rank(m, s) + 1 == s.size();
}

FacetSet extract_circlet(const IncidenceMatrixGF2& m, const FacetSet& s) {
  if (!is_even_subset(m, s)) throw Error(ErrorCode::NotEven, "facet set is not even");
  FacetSet current = s;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const CellId& f : current) {
      FacetSet rest = current;
      rest.erase(f);
      if (auto smaller = find_even_subset(m, rest)) {
        current = std::move(*smaller);
        shrunk = true;
        break;
      }
    }
  }
  return current;
}

CircletDecomposition decompose_into_circlets(const Complex& k) {
  const auto m = incidence_matrix(k);
  FacetSet remaining(m.column_ids().begin(), m.column_ids().end());
  if (!is_even_subset(m, remaining)) throw Error(ErrorCode::NotEven, "complex is not even");

  CircletDecomposition d;
  while (!remaining.empty()) {
    FacetSet part = extract_circlet(m, remaining);
    for (const CellId& f : part) remaining.erase(f);
    d.parts.push_back(std::move(part));
  }
  return d;
}

ValidationReport validate_decomposition(const Complex& k, const CircletDecomposition& d) {
  ValidationReport report;
  report.scope = "circlet-decomposition";

  IncidenceMatrixGF2 m;
  try {
    m = incidence_matrix(k);
  } catch (const Error& e) {
    report.violations.push_back({std::string(error_name(e.code())), {}, e.what()});
    return report;
  }

  std::map<CellId, std::size_t> owner;
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    const FacetSet& part = d.parts[p];
    const std::string label = "part " + std::to_string(p);
    bool known = !part.empty();
    if (part.empty()) report.violations.push_back({"empty_part", {}, label + " is empty"});
    for (const CellId& f : part) {
      if (!std::binary_search(m.column_ids().begin(), m.column_ids().end(), f)) {
        report.violations.push_back({"unknown_facet", {f}, label + " names a non-facet"});
        known = false;
        continue;
      }
      auto [it, inserted] = owner.emplace(f, p);
      if (!inserted) {
        report.violations.push_back(
            {"disjoint", {f}, "facet in parts " + std::to_string(it->second) + " and " + std::to_string(p)});
      }
    }
    if (!known) continue;
    if (!is_even_subset(m, part)) {
      report.violations.push_back({"even", {part.begin(), part.end()}, label + " is not even"});
    } else if (!is_circlet_subset(m, part)) {
      report.violations.push_back(
          {"minimal", {part.begin(), part.end()}, label + " contains a proper even subset"});
    }
  }
  for (const CellId& f : m.column_ids()) {
    if (!owner.contains(f)) report.violations.push_back({"cover", {f}, "facet not in any part"});
  }
  return report;
}

}  // namespace eulercw
