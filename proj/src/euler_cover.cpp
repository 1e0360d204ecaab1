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

#include "eulercw/euler_cover.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "eulercw/gf2_matroid.hpp"

namespace eulercw {

FacetPair FacetPair::of(CellId a, CellId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

const std::vector<FacetPair>& Gluing::pairs_at(std::string_view side) const {
  auto it = pairs_.find(std::string(side));
  if (it == pairs_.end()) {
    throw Error(ErrorCode::GluingMismatch, "gluing has no side '" + std::string(side) + "'");
  }
  return it->second;
}

std::size_t Gluing::total_pairs() const {
  std::size_t n = 0;
  for (const auto& [side, list] : pairs_) n += list.size();
  return n;
}

const CellId& Gluing::partner(std::string_view side, std::string_view facet) const {
  return pairs_at(side).at(static_cast<std::size_t>(index(side, facet) - 1)).other(facet);
}

int Gluing::index(std::string_view side, std::string_view facet) const {
  const auto& list = pairs_at(side);
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (list[j].contains(facet)) return static_cast<int>(j + 1);
  }
  throw Error(ErrorCode::GluingMismatch,
              "facet '" + std::string(facet) + "' is not paired at side '" + std::string(side) + "'");
}

CellId side_copy_id(std::string_view side, int j) {
  return std::string(side) + "#" + std::to_string(j);
}

CellId facet_hat_id(std::string_view facet) { return std::string(facet) + "^"; }

const CellId& CoverMap::image(std::string_view source_cell) const {
  auto it = cell_map.find(std::string(source_cell));
  if (it == cell_map.end()) {
    throw Error(ErrorCode::InvalidCover, "cell '" + std::string(source_cell) + "' is not mapped");
  }
  return it->second;
}

namespace {

// Checks shared by every entry point that needs an even complex.
void require_even(const Complex& k) {
  const DegreeProfile profile = degree_profile(k);
  if (!profile.is_pure) throw Error(ErrorCode::NotPure, "complex is not pure");
  for (const auto& [side, d] : profile.degrees) {
    if (d == 0 || d % 2 != 0) {
      throw Error(ErrorCode::NotEven,
                  "side '" + side + "' has degree " + std::to_string(d));
    }
  }
}

std::vector<CellId> facet_ids(const Complex& k) {
  std::vector<CellId> out;
  for (CellIndex f : k.facets()) out.push_back(k.id(f));
  return out;
}

std::vector<CellId> side_ids(const Complex& k) {
  std::vector<CellId> out;
  for (CellIndex s : k.sides()) out.push_back(k.id(s));
  return out;
}

void require_circlet(const Complex& c) {
  require_even(c);
  const auto m = incidence_matrix(c);
  const FacetSet all(m.column_ids().begin(), m.column_ids().end());
  if (!is_circlet_subset(m, all)) {
    throw Error(ErrorCode::NotCirclet, "complex has a proper even facet subset");
  }
}

// Replaces the first L-pair and the first C-pair at `side` by the
// recombination {sigma, mu}, {tau, lambda}, where sigma < tau and mu < lambda.
Gluing recombine(const Gluing& gl, const Gluing& gc, const std::string& side) {
  std::map<CellId, std::vector<FacetPair>> pairs = gl.pairs();
  for (const auto& [s, list] : gc.pairs()) {
    auto& dst = pairs[s];
    dst.insert(dst.end(), list.begin(), list.end());
  }
  auto& at_side = pairs.at(side);
  const std::size_t i = 0;
  const std::size_t j = gl.pair_count(side);
  const FacetPair from_l = at_side[i];
  const FacetPair from_c = at_side[j];
  at_side[i] = FacetPair::of(from_l.first, from_c.first);
  at_side[j] = FacetPair::of(from_l.second, from_c.second);
  return Gluing(std::move(pairs));
}

std::string smallest_shared_side(const Complex& l, const Complex& c) {
  for (const CellId& s : side_ids(l)) {
    auto i = c.find(s);
    if (i && c.cell(*i).dim == c.dimension() - 1) return s;
  }
  throw Error(ErrorCode::NoSharedSide, "complexes share no side");
}

void require_facet_disjoint(const Complex& l, const Complex& c) {
  if (l.dimension() != c.dimension()) {
    throw Error(ErrorCode::GluingMismatch, "covers have different dimensions");
  }
  for (const CellId& f : facet_ids(l)) {
    if (c.contains(f)) {
      throw Error(ErrorCode::NotFacetDisjoint, "facet '" + f + "' lies in both complexes");
    }
  }
}

}  // namespace

Gluing canonical_gluing(const Complex& k, Strategy strategy) {
  require_even(k);
  std::mt19937_64 rng(strategy.seed);
  std::map<CellId, std::vector<FacetPair>> pairs;
  for (CellIndex s : k.sides()) {
    std::vector<CellId> facets;
    for (CellIndex f : k.cell(s).coboundary) facets.push_back(k.id(f));
    if (strategy.kind == Strategy::Kind::seeded) std::shuffle(facets.begin(), facets.end(), rng);
    auto& list = pairs[k.id(s)];
    for (std::size_t i = 0; i + 1 < facets.size(); i += 2) {
      list.push_back(FacetPair::of(facets[i], facets[i + 1]));
    }
  }
  return Gluing(std::move(pairs));
}

GluedCover build_glued_complex(const Complex& k, const Gluing& g) {
  const int n = k.dimension();
  if (n == 0) throw Error(ErrorCode::ZeroDimensional, "analysis requires dimension >= 1");

  const auto sides = side_ids(k);
  if (g.pairs().size() != sides.size()) {
    throw Error(ErrorCode::GluingMismatch, "gluing and complex have different side sets");
  }
  std::map<std::pair<CellId, CellId>, int> nu;  // (side, facet) -> copy index
  for (CellIndex s : k.sides()) {
    const CellId& sid = k.id(s);
    auto it = g.pairs().find(sid);
    if (it == g.pairs().end()) {
      throw Error(ErrorCode::GluingMismatch, "gluing misses side '" + sid + "'");
    }
    std::vector<CellId> paired;
    for (std::size_t j = 0; j < it->second.size(); ++j) {
      const FacetPair& p = it->second[j];
      if (p.first == p.second) {
        throw Error(ErrorCode::GluingMismatch, "facet paired with itself at '" + sid + "'");
      }
      paired.push_back(p.first);
      paired.push_back(p.second);
      nu[{sid, p.first}] = static_cast<int>(j + 1);
      nu[{sid, p.second}] = static_cast<int>(j + 1);
    }
    std::sort(paired.begin(), paired.end());
    std::vector<CellId> expected;
    for (CellIndex f : k.cell(s).coboundary) expected.push_back(k.id(f));
    if (paired != expected) {
      throw Error(ErrorCode::GluingMismatch,
                  "pairs at side '" + sid + "' do not partition its facets");
    }
  }

  GluedCover out;
  std::vector<CellSpec> cells;
  for (const CellSpec& spec : k.specs()) {
    if (spec.dim <= n - 2) {
      cells.push_back(spec);
      out.cover.cell_map.emplace(spec.id, spec.id);
    } else if (spec.dim == n - 1) {
      const int copies = static_cast<int>(g.pair_count(spec.id));
      for (int j = 1; j <= copies; ++j) {
        CellId copy = side_copy_id(spec.id, j);
        cells.push_back({copy, spec.dim, spec.boundary});
        out.glued.side_copies.emplace(copy, SideCopy{spec.id, j});
        out.cover.cell_map.emplace(copy, spec.id);
      }
    } else {
      CellId hat = facet_hat_id(spec.id);
      CellSpec facet{hat, spec.dim, {}};
      for (const CellId& s : spec.boundary) facet.boundary.push_back(side_copy_id(s, nu.at({s, spec.id})));
      cells.push_back(std::move(facet));
      out.glued.facet_origin.emplace(hat, spec.id);
      out.cover.cell_map.emplace(hat, spec.id);
    }
  }
  out.glued.complex = Complex::build(std::move(cells));
  out.cover.source = out.glued.complex;
  out.cover.target = k;
  return out;
}

CoverMap cover_circlet(const Complex& circlet, Strategy strategy) {
  require_circlet(circlet);
  return build_glued_complex(circlet, canonical_gluing(circlet, strategy)).cover;
}

CoverMap merge_covers(const CoverMap& cover_l, const CoverMap& cover_c, std::string_view side) {
  require_facet_disjoint(cover_l.target, cover_c.target);
  const std::string s(side);
  for (const Complex* t : {&cover_l.target, &cover_c.target}) {
    auto i = t->find(s);
    if (!i || t->cell(*i).dim != t->dimension() - 1) {
      throw Error(ErrorCode::NoSharedSide, "'" + s + "' is not a side of both complexes");
    }
  }
  const Gluing gl = gluing_from_cover(cover_l);
  const Gluing gc = gluing_from_cover(cover_c);
  const Complex k = complex_union(cover_l.target, cover_c.target);
  return build_glued_complex(k, recombine(gl, gc, s)).cover;
}

CoverMap merge_covers(const CoverMap& cover_l, const CoverMap& cover_c) {
  require_facet_disjoint(cover_l.target, cover_c.target);
  return merge_covers(cover_l, cover_c, smallest_shared_side(cover_l.target, cover_c.target));
}

CoverMap euler_cover(const Complex& k, Strategy strategy) {
  require_even(k);
  if (!is_strongly_connected(k)) {
    throw Error(ErrorCode::NotStronglyConnected, "dual multigraph is disconnected");
  }

  auto parts = decompose_into_circlets(k).parts;
  std::sort(parts.begin(), parts.end());

  std::vector<std::set<CellIndex>> part_sides(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const CellId& f : parts[p]) {
      const auto& b = k.cell(k.index_of(f)).boundary;
      part_sides[p].insert(b.begin(), b.end());
    }
  }
  auto adjacent = [&](std::size_t a, std::size_t b) {
    for (CellIndex s : part_sides[a]) {
      if (part_sides[b].contains(s)) return true;
    }
    return false;
  };

  // Breadth-first order keeps every prefix union strongly connected.
  std::vector<std::size_t> order;
  std::vector<bool> seen(parts.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    order.push_back(p);
    for (std::size_t q = 0; q < parts.size(); ++q) {
      if (!seen[q] && adjacent(p, q)) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }

  // The fold works on gluings directly: each step is merge_covers without
  // re-reading the gluing off an intermediate cover. The source is built once.
  Complex acc_target;
  Gluing acc;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const Complex piece = induced_subcomplex(k, parts[order[step]]);
    Strategy local = strategy;
    local.seed += step;
    require_circlet(piece);
    const Gluing g = canonical_gluing(piece, local);
    if (step == 0) {
      acc_target = piece;
      acc = g;
      continue;
    }
    const std::string side = smallest_shared_side(acc_target, piece);
    acc = recombine(acc, g, side);
    acc_target = complex_union(acc_target, piece);
  }
  return build_glued_complex(acc_target, acc).cover;
}

Gluing gluing_from_cover(const CoverMap& cover) {
  const ValidationReport report = verify_cover(cover);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    throw Error(ErrorCode::InvalidCover, v.rule + ": " + v.message);
  }

  const Complex& m = cover.source;
  struct Keyed {
    long copy;
    CellId id;
    FacetPair pair;
  };
  std::map<CellId, std::vector<Keyed>> per_side;
  for (CellIndex s_hat : m.sides()) {
    const CellId& copy_id = m.id(s_hat);
    const CellId& s = cover.image(copy_id);
    const auto& cob = m.cell(s_hat).coboundary;
    FacetPair pair = FacetPair::of(cover.image(m.id(cob[0])), cover.image(m.id(cob[1])));

    // Copies named "s#j" keep their index; anything else sorts after them.
    long copy = std::numeric_limits<long>::max();
    const std::string prefix = s + "#";
    if (copy_id.size() > prefix.size() && copy_id.starts_with(prefix)) {
      long j = 0;
      const char* begin = copy_id.data() + prefix.size();
      const char* end = copy_id.data() + copy_id.size();
      auto [ptr, ec] = std::from_chars(begin, end, j);
      if (ec == std::errc() && ptr == end) copy = j;
    }
    per_side[s].push_back({copy, copy_id, std::move(pair)});
  }

  std::map<CellId, std::vector<FacetPair>> pairs;
  for (auto& [s, list] : per_side) {
    std::sort(list.begin(), list.end(), [](const Keyed& a, const Keyed& b) {
      return a.copy != b.copy ? a.copy < b.copy : a.id < b.id;
    });
    auto& dst = pairs[s];
    for (Keyed& kp : list) dst.push_back(std::move(kp.pair));
  }
  return Gluing(std::move(pairs));
}

ValidationReport verify_cover(const CoverMap& cover) {
  ValidationReport report;
  report.scope = "euler-cover";
  auto fail = [&](const char* rule, std::vector<CellId> cells, std::string message) {
    report.violations.push_back({rule, std::move(cells), std::move(message)});
  };

  const Complex& m = cover.source;
  const Complex& k = cover.target;
  const int n = m.dimension();
  auto image_of = [&](const CellId& c) -> const CellId* {
    auto it = cover.cell_map.find(c);
    return it == cover.cell_map.end() ? nullptr : &it->second;
  };

  // (a) purity
  if (n == 0) fail("source_pure", {}, "source is zero-dimensional");
  if (!m.is_pure()) fail("source_pure", {}, "source is not pure");

  // (b) every side of the source in exactly two facets
  for (CellIndex s : m.sides()) {
    const std::size_t d = m.cell(s).coboundary.size();
    if (n >= 1 && d != 2) {
      fail("side_degree_two", {m.id(s)}, "side has degree " + std::to_string(d));
    }
  }

  // (c) strong connectivity, computed without assuming purity
  if (n >= 1) {
    const auto facets = m.facets();
    std::vector<std::size_t> label(facets.size());
    std::iota(label.begin(), label.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return label[x] == x ? x : label[x] = root(label[x]);
    };
    for (CellIndex s : m.sides()) {
      const auto& cob = m.cell(s).coboundary;
      for (std::size_t i = 1; i < cob.size(); ++i) {
        label[root(cob[i] - facets.front())] = root(cob[0] - facets.front());
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < facets.size(); ++i) roots.insert(root(i));
    if (roots.size() != 1) {
      fail("source_strongly_connected", {},
           "source has " + std::to_string(roots.size()) + " strong components");
    }
  }

  // (d) identical (n-2)-skeleta, fixed pointwise by the map
  if (k.dimension() != n) {
    fail("lower_skeleton_identity", {}, "source and target dimensions differ");
  }
  {
    std::vector<CellSpec> low_m, low_k;
    for (auto& spec : m.specs()) {
      if (spec.dim <= n - 2) low_m.push_back(std::move(spec));
    }
    for (auto& spec : k.specs()) {
      if (spec.dim <= n - 2) low_k.push_back(std::move(spec));
    }
    if (low_m != low_k) fail("lower_skeleton_identity", {}, "(n-2)-skeleta differ");
    for (const CellSpec& spec : low_m) {
      const CellId* img = image_of(spec.id);
      if (!img || *img != spec.id) {
        fail("lower_skeleton_identity", {spec.id}, "map is not the identity on this cell");
      }
    }
  }

  // (e) bijection on facets
  {
    std::set<CellId> hit;
    for (CellIndex f : m.facets()) {
      const CellId* img = image_of(m.id(f));
      auto target = img ? k.find(*img) : std::nullopt;
      if (!target || k.cell(*target).dim != k.dimension()) {
        fail("facet_bijection", {m.id(f)}, "facet does not map to a facet");
      } else if (!hit.insert(*img).second) {
        fail("facet_bijection", {m.id(f), *img}, "two facets share an image");
      }
    }
    if (hit.size() != k.facets().size() && n >= 1) {
      fail("facet_bijection", {}, "map misses " + std::to_string(k.facets().size() - hit.size()) +
                                      " target facets");
    }
  }

  // (f) dimension-preserving poset map
  for (const auto& [from, to] : cover.cell_map) {
    if (!m.contains(from)) fail("cellular_map", {from}, "map names an unknown source cell");
  }
  for (CellIndex c = 0; c < m.size(); ++c) {
    const Cell& cell = m.cell(c);
    const CellId* img = image_of(cell.id);
    auto target = img ? k.find(*img) : std::nullopt;
    if (!target) {
      fail("cellular_map", {cell.id}, "cell has no image in the target");
      continue;
    }
    const Cell& tcell = k.cell(*target);
    if (tcell.dim != cell.dim) {
      fail("cellular_map", {cell.id, tcell.id}, "image has a different dimension");
      continue;
    }
    std::set<CellId> mapped, expected;
    for (CellIndex b : cell.boundary) {
      const CellId* bi = image_of(m.id(b));
      mapped.insert(bi ? *bi : std::string{});
    }
    for (CellIndex b : tcell.boundary) expected.insert(k.id(b));
    if (mapped != expected) {
      fail("cellular_map", {cell.id, tcell.id}, "boundary does not map onto the image's boundary");
    }
  }

  // (g) deg_K(s) = 2 |preimage(s)|
  {
    std::map<CellId, std::size_t> preimages;
    for (CellIndex s : m.sides()) {
      if (const CellId* img = image_of(m.id(s))) ++preimages[*img];
    }
    for (CellIndex s : k.sides()) {
      const std::size_t deg = k.cell(s).coboundary.size();
      const std::size_t count = preimages[k.id(s)];
      if (deg != 2 * count) {
        fail("side_preimage_count", {k.id(s)},
             "degree " + std::to_string(deg) + " but " + std::to_string(count) + " preimages");
      }
    }
  }

  // (h) the link multigraph at each corner is 2-regular
  for (CellIndex c : m.cells_of_dim(n - 2)) {
    if (n < 2) break;
    const DualMultigraph link = corner_link(m, m.id(c));
    std::map<CellId, int> degree;
    for (const CellId& v : link.vertices) degree[v] = 0;
    for (const DualEdge& e : link.edges) {
      ++degree[e.a];
      ++degree[e.b];
    }
    for (const auto& [f, d] : degree) {
      if (d != 2) {
        fail("corner_link_two_regular", {m.id(c), f},
             "facet has degree " + std::to_string(d) + " in the corner link");
      }
    }
  }

  return report;
}

std::vector<CellId> side_tour(const Complex& m) {
  if (!is_pseudomanifold(m)) throw Error(ErrorCode::NotPseudomanifold, "complex is not a pseudomanifold");

  const DualMultigraph dual = dual_multigraph(m);
  std::set<std::pair<CellId, CellId>> joined;
  for (const DualEdge& e : dual.edges) {
    if (!joined.emplace(e.a, e.b).second) {
      throw Error(ErrorCode::DualNotSimple,
                  "facets '" + e.a + "' and '" + e.b + "' share more than one side");
    }
  }
  for (CellIndex f : m.facets()) {
    if (m.cell(f).boundary.size() % 2 != 0) {
      throw Error(ErrorCode::OddFacet, "facet '" + m.id(f) + "' has an odd number of sides");
    }
  }

  // Hierholzer on M*: facets are vertices, each side is the edge between its
  // two facets. Unused edges are taken in side-id order.
  const auto facets = m.facets();
  const CellIndex first = facets.front();
  std::vector<std::size_t> next_edge(facets.size(), 0);
  std::vector<bool> used(m.size(), false);
  struct Frame {
    CellIndex facet;
    std::optional<CellIndex> via;
  };
  std::vector<Frame> stack{{first, std::nullopt}};
  std::vector<CellId> circuit;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& walls = m.cell(top.facet).boundary;
    std::size_t& cursor = next_edge[top.facet - first];
    while (cursor < walls.size() && used[walls[cursor]]) ++cursor;
    if (cursor == walls.size()) {
      if (top.via) circuit.push_back(m.id(*top.via));
      stack.pop_back();
      continue;
    }
    const CellIndex side = walls[cursor];
    used[side] = true;
    const auto& cob = m.cell(side).coboundary;
    const CellIndex across = cob[0] == top.facet ? cob[1] : cob[0];
    stack.push_back({across, side});
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace eulercw
