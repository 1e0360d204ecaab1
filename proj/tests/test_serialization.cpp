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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulercw/euler_cover.hpp"
#include "eulercw/gf2_matroid.hpp"
#include "eulercw/serialization.hpp"
#include "support.hpp"

using namespace eulercw;
using namespace eulercw::testing;

namespace {

const std::string kData = EULERCW_TEST_DATA;

}  // namespace

TEST_CASE("corpus files match the generators and round trip bit-exactly") {
  const std::vector<std::pair<std::string, Complex>> files{
      {"delta5_2.json", delta5_2()},   {"delta4_2.json", delta4_2()},
      {"octahedron.json", octahedron()}, {"cube.json", cube()},
      {"cycle6.json", cycle(6)},       {"triangular_grid_3.json", grid()},
      {"finned_3_4.json", finned(3, 4)}};
  for (const auto& [file, expected] : files) {
    CAPTURE(file);
    const std::string text = read_text(kData + "/" + file);
    REQUIRE_FALSE(text.empty());
    const Complex k = complex_from_json(text);
    CHECK(k == expected);
    CHECK(complex_to_json(k) == text);
  }
}

TEST_CASE("complex JSON is sorted by dimension then id") {
  auto specs = delta5_2().specs();
  std::reverse(specs.begin(), specs.end());
  for (auto& s : specs) std::reverse(s.boundary.begin(), s.boundary.end());
  const std::string text = complex_to_json(Complex::build(specs));
  CHECK(text == complex_to_json(delta5_2()));
  CHECK(text.find("\"dimension\": 2") != std::string::npos);
}

TEST_CASE("malformed documents raise ParseError") {
  const std::vector<std::string> bad{
      "",
      "{",
      "[]",
      R"({"cells": []})",
      R"({"dimension": 1, "cells": {}})",
      R"({"dimension": 1, "cells": [{"id": "v"}]})",
      R"({"dimension": "x", "cells": []})",
      R"({"dimension": 1, "cells": [{"id": 3, "dim": 0, "boundary": []}]})",
      R"({"dimension": 2, "cells": [{"id": "v", "dim": 0, "boundary": []}]})"};
  for (const auto& text : bad) {
    CAPTURE(text);
    CHECK(code_of([&] { complex_from_json(text); }) == ErrorCode::ParseError);
  }
  CHECK(code_of([] { complex_from_json(R"({"dimension": 1, "cells": [
      {"id": "v", "dim": 0, "boundary": []},
      {"id": "e", "dim": 1, "boundary": ["v", "v"]}]})"); }) == ErrorCode::NonRegularEdge);
  CHECK(code_of([] { decomposition_from_json(R"({"parts": 3})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cover_from_json(R"({"source": {}})"); }) == ErrorCode::ParseError);
}

TEST_CASE("decomposition and cover documents round trip") {
  for (const auto& [name, k] : corpus()) {
    CAPTURE(name);
    const auto d = decompose_into_circlets(k);
    const std::string dtext = decomposition_to_json(d);
    CHECK(decomposition_from_json(dtext).parts == d.parts);
    CHECK(decomposition_to_json(decomposition_from_json(dtext)) == dtext);

    const CoverMap c = euler_cover(k);
    const std::string ctext = cover_to_json(c);
    const CoverMap back = cover_from_json(ctext);
    CHECK(back.source == c.source);
    CHECK(back.target == c.target);
    CHECK(back.cell_map == c.cell_map);
    CHECK(cover_to_json(back) == ctext);
  }
}

TEST_CASE("cover JSON carries the source euler characteristic and a sorted map") {
  const std::string text = cover_to_json(euler_cover(delta5_2()));
  CHECK(text.find("\"source_euler_characteristic\": -4") != std::string::npos);
  const CoverMap c = cover_from_json(text);
  CHECK(c.cell_map.size() == c.source.size());
}

TEST_CASE("duplicate map entries are rejected") {
  const std::string text = R"({"source": {"dimension": 0, "cells": [{"id": "a", "dim": 0, "boundary": []}]},
    "target": {"dimension": 0, "cells": [{"id": "a", "dim": 0, "boundary": []}]},
    "map": [{"from": "a", "to": "a"}, {"from": "a", "to": "a"}]})";
  CHECK(code_of([&] { cover_from_json(text); }) == ErrorCode::ParseError);
}

TEST_CASE("analysis document") {
  const std::string text = analysis_to_json(delta5_2());
  CHECK(text.find("\"degree_histogram\": {\n    \"4\": 15\n  }") != std::string::npos);
  CHECK(text.find("\"strong_components\": 1") != std::string::npos);
  CHECK(text.find("\"euler_characteristic\": 11") != std::string::npos);
  CHECK(text.find("\"is_even\": true") != std::string::npos);
}

TEST_CASE("DOT export collapses parallel dual edges") {
  const std::string dot = dual_to_dot(delta5_2());
  CHECK(dot.rfind("graph dual {", 0) == 0);
  // Delta5_2 facets share at most one edge: 90 single edges
  std::size_t lines = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++lines;
  CHECK(lines == 90);

  const Complex pillow = Complex::build(
      {{"a", 0, {}}, {"b", 0, {}}, {"c", 0, {}},
       {"ab", 1, {"a", "b"}}, {"bc", 1, {"b", "c"}}, {"ac", 1, {"a", "c"}},
       {"top", 2, {"ab", "bc", "ac"}}, {"bot", 2, {"ab", "bc", "ac"}}});
  const std::string p = dual_to_dot(pillow);
  CHECK(p.find("\"bot\" -- \"top\" [label=\"3: ab,ac,bc\", style=bold, penwidth=3];") !=
        std::string::npos);
}

TEST_CASE("reports and tours serialize") {
  ValidationReport r{"scope-x", {{"rule", {"a", "b"}, "msg"}}};
  const std::string text = report_to_json(r);
  CHECK(text.find("\"passed\": false") != std::string::npos);
  CHECK(text.find("\"scope\": \"scope-x\"") != std::string::npos);
  CHECK(tour_to_json({"a", "b"}) == "[\n  \"a\",\n  \"b\"\n]\n");
  CHECK(error_to_json(Error(ErrorCode::NotEven, "odd")).find("\"error\": \"NotEven\"") !=
        std::string::npos);
}
