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
#include <optional>
#include <vector>

#include "eulercw/complex.hpp"

namespace eulercw {

/// Fixed-length packed bit vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other);
  bool none() const noexcept;
  std::size_t count() const noexcept;
  /// Index of the lowest set bit; size() when none.
  std::size_t lowest() const noexcept;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Side-by-facet incidence over GF(2). Row i is the i-th side in id order,
/// column j the j-th facet in id order.
class IncidenceMatrixGF2 {
 public:
  const std::vector<CellId>& row_ids() const noexcept { return rows_; }
  const std::vector<CellId>& column_ids() const noexcept { return columns_; }
  const BitVector& column(std::size_t j) const { return support_.at(j); }
  std::size_t row_weight(std::size_t i) const;
  std::size_t column_weight(std::size_t j) const { return support_.at(j).count(); }

  /// Throws UnknownFacet.
  std::size_t column_index(std::string_view facet) const;

  friend IncidenceMatrixGF2 incidence_matrix(const Complex& k);

 private:
  std::vector<CellId> rows_;
  std::vector<CellId> columns_;
  std::vector<BitVector> support_;
};

/// Throws NotPure or ZeroDimensional.
IncidenceMatrixGF2 incidence_matrix(const Complex& k);

/// True when S is nonempty and its columns sum to zero, i.e. K(S) is even.
bool is_even_subset(const IncidenceMatrixGF2& m, const FacetSet& s);

/// A nonempty even subset of S, or nullopt when the columns of S are
/// independent. Columns are eliminated in id order and the dependency found
/// at the first column that reduces to zero is returned.
std::optional<FacetSet> find_even_subset(const IncidenceMatrixGF2& m, const FacetSet& s);

/// GF(2) rank of the columns of S.
std::size_t column_rank(const IncidenceMatrixGF2& m, const FacetSet& s);

/// An even S is a circlet exactly when its only dependency is S itself,
/// that is rank(S) = |S| - 1.
bool is_circlet_subset(const IncidenceMatrixGF2& m, const FacetSet& s);

/// Shrinks an even S to a minimal even subset. Throws NotEven.
FacetSet extract_circlet(const IncidenceMatrixGF2& m, const FacetSet& s);

struct CircletDecomposition {
  std::vector<FacetSet> parts;
};

/// Peels circlets off K in order until no facet is left.
/// Throws NotPure, NotEven or ZeroDimensional.
CircletDecomposition decompose_into_circlets(const Complex& k);

/// Checks that the parts partition K^(n) and that every part is a circlet.
ValidationReport validate_decomposition(const Complex& k, const CircletDecomposition& d);

}  // namespace eulercw
