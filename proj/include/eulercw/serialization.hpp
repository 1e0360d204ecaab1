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

#include <string>
#include <string_view>
#include <vector>

#include "eulercw/complex.hpp"
#include "eulercw/euler_cover.hpp"
#include "eulercw/gf2_matroid.hpp"

// JSON and DOT encodings. All writers are deterministic: cells sorted by
// (dim, id), boundaries and facet sets by id, two-space indentation and a
// trailing newline. Readers throw Error(ParseError) on malformed documents
// and the usual build errors on malformed complexes.

namespace eulercw {

std::string complex_to_json(const Complex& k);
Complex complex_from_json(std::string_view text);

std::string decomposition_to_json(const CircletDecomposition& d);
CircletDecomposition decomposition_from_json(std::string_view text);

/// {"source": ..., "target": ..., "map": [...], "source_euler_characteristic": chi}.
/// The characteristic is informational and ignored when reading.
std::string cover_to_json(const CoverMap& cover);
CoverMap cover_from_json(std::string_view text);

std::string report_to_json(const ValidationReport& report);
std::string tour_to_json(const std::vector<CellId>& tour);
std::string error_to_json(const Error& error);

/// Dimension, cell counts, degree histogram, purity, evenness, strong
/// component count (null when not pure) and Euler characteristic.
std::string analysis_to_json(const Complex& k);

/// The dual multigraph in Graphviz syntax. Parallel edges between one facet
/// pair are drawn as a single bold edge labelled with multiplicity and sides.
std::string dual_to_dot(const Complex& k);

}  // namespace eulercw
