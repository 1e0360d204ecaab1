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

#include "eulercw/serialization.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace eulercw {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// Wraps nlohmann type errors so callers only ever see ParseError.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed document: ") + e.what());
  }
}

void expect(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParseError, message);
}

Json complex_json(const Complex& k) {
  Json cells = Json::array();
  for (const CellSpec& spec : k.specs()) {
    cells.push_back({{"id", spec.id}, {"dim", spec.dim}, {"boundary", spec.boundary}});
  }
  return {{"dimension", k.dimension()}, {"cells", std::move(cells)}};
}

Complex complex_of(const Json& j) {
  std::vector<CellSpec> cells;
  int dimension = 0;
  guarded([&] {
    expect(j.is_object(), "complex must be a JSON object");
    expect(j.contains("dimension") && j.contains("cells"), "complex needs 'dimension' and 'cells'");
    expect(j.at("cells").is_array(), "'cells' must be an array");
    dimension = j.at("dimension").get<int>();
    for (const Json& c : j.at("cells")) {
      expect(c.is_object() && c.contains("id") && c.contains("dim") && c.contains("boundary"),
             "each cell needs 'id', 'dim' and 'boundary'");
      cells.push_back({c.at("id").get<std::string>(), c.at("dim").get<int>(),
                       c.at("boundary").get<std::vector<std::string>>()});
    }
    return 0;
  });
  Complex k = Complex::build(std::move(cells));
  expect(k.dimension() == dimension,
         "declared dimension " + std::to_string(dimension) + " but cells reach " +
             std::to_string(k.dimension()));
  return k;
}

}  // namespace

std::string complex_to_json(const Complex& k) { return dump(complex_json(k)); }

Complex complex_from_json(std::string_view text) { return complex_of(parse(text)); }

std::string decomposition_to_json(const CircletDecomposition& d) {
  Json parts = Json::array();
  for (const FacetSet& part : d.parts) parts.push_back(Json(std::vector<CellId>(part.begin(), part.end())));
  return dump({{"parts", std::move(parts)}});
}

CircletDecomposition decomposition_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    expect(j.is_object() && j.contains("parts") && j.at("parts").is_array(),
           "decomposition needs a 'parts' array");
    CircletDecomposition d;
    for (const Json& part : j.at("parts")) {
      const auto ids = part.get<std::vector<std::string>>();
      d.parts.emplace_back(ids.begin(), ids.end());
    }
    return d;
  });
}

std::string cover_to_json(const CoverMap& cover) {
  Json map = Json::array();
  for (const auto& [from, to] : cover.cell_map) map.push_back({{"from", from}, {"to", to}});
  Json j;
  j["source"] = complex_json(cover.source);
  j["target"] = complex_json(cover.target);
  j["map"] = std::move(map);
  j["source_euler_characteristic"] = euler_characteristic(cover.source);
  return dump(j);
}

CoverMap cover_from_json(std::string_view text) {
  const Json j = parse(text);
  guarded([&] {
    expect(j.is_object() && j.contains("source") && j.contains("target") && j.contains("map"),
           "cover needs 'source', 'target' and 'map'");
    expect(j.at("map").is_array(), "'map' must be an array");
    return 0;
  });
  CoverMap cover;
  cover.source = complex_of(j.at("source"));
  cover.target = complex_of(j.at("target"));
  guarded([&] {
    for (const Json& entry : j.at("map")) {
      auto [it, inserted] = cover.cell_map.emplace(entry.at("from").get<std::string>(),
                                                   entry.at("to").get<std::string>());
      expect(inserted, "cell '" + it->first + "' is mapped twice");
    }
    return 0;
  });
  return cover;
}

std::string report_to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"rule", v.rule}, {"cells", v.cells}, {"message", v.message}});
  }
  return dump({{"passed", report.passed()},
               {"scope", report.scope},
               {"violations", std::move(violations)}});
}

std::string tour_to_json(const std::vector<CellId>& tour) { return dump(Json(tour)); }

std::string error_to_json(const Error& error) {
  return dump({{"error", std::string(error_name(error.code()))}, {"message", error.what()}});
}

std::string analysis_to_json(const Complex& k) {
  const DegreeProfile profile = degree_profile(k);
  Json counts = Json::array();
  for (int r = 0; r <= k.dimension(); ++r) counts.push_back(k.cells_of_dim(r).size());

  std::map<int, int> histogram;
  for (const auto& [side, d] : profile.degrees) ++histogram[d];
  Json hist = Json::object();
  for (const auto& [d, count] : histogram) hist[std::to_string(d)] = count;

  Json j;
  j["dimension"] = k.dimension();
  j["cell_counts"] = std::move(counts);
  j["degree_histogram"] = std::move(hist);
  j["is_pure"] = profile.is_pure;
  j["is_even"] = profile.is_even;
  j["strong_components"] = profile.is_pure ? Json(strong_components(k).size()) : Json(nullptr);
  j["euler_characteristic"] = euler_characteristic(k);
  return dump(j);
}

std::string dual_to_dot(const Complex& k) {
  const DualMultigraph g = dual_multigraph(k);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };

  std::map<std::pair<CellId, CellId>, std::vector<CellId>> bundles;
  for (const DualEdge& e : g.edges) bundles[{e.a, e.b}].push_back(e.side);

  std::ostringstream out;
  out << "graph dual {\n";
  for (const CellId& v : g.vertices) out << "  " << quote(v) << ";\n";
  for (const auto& [ends, sides] : bundles) {
    std::string label;
    for (const CellId& s : sides) label += (label.empty() ? "" : ",") + s;
    out << "  " << quote(ends.first) << " -- " << quote(ends.second);
    if (sides.size() == 1) {
      out << " [label=" << quote(label) << "];\n";
    } else {
      out << " [label=" << quote(std::to_string(sides.size()) + ": " + label)
          << ", style=bold, penwidth=" << sides.size() << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace eulercw
