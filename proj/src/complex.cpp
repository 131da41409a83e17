// Copyright 2026 The panelcollapse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "panelcollapse/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

// Above this vertex count the interval table gets too large and the median
// test switches to majority closure over halfspace coordinates.
constexpr std::size_t kIntervalTableLimit = 1000;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> all_pairs_distances(
    const std::vector<std::vector<VertexId>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<VertexId> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<VertexId>(s);
    row[s] = 0;
    while (head < tail) {
      VertexId x = queue[head++];
      for (VertexId y : adjacency[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue[tail++] = y;
        }
      }
    }
  }
  return dist;
}

// Exhaustive median test through interval bitsets I(a,b).
std::optional<MedianViolation> find_median_violation(
    const std::vector<std::vector<int>>& dist) {
  const std::size_t n = dist.size();
  const std::size_t w = words_for(n);
  // Upper-triangular table: interval(a, b) for a < b.
  std::vector<std::uint64_t> table(n * (n - 1) / 2 * w + w, 0);
  auto slot = [&](std::size_t a, std::size_t b) {
    // a < b
    std::size_t row_start = a * (2 * n - a - 1) / 2;
    return table.data() + (row_start + (b - a - 1)) * w;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t* bits = slot(a, b);
      const int dab = dist[a][b];
      for (std::size_t m = 0; m < n; ++m) {
        if (dist[a][m] + dist[m][b] == dab) bits[m / 64] |= std::uint64_t{1} << (m % 64);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint64_t* ab = slot(a, b);
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::uint64_t* ac = slot(a, c);
        const std::uint64_t* bc = slot(b, c);
        std::size_t count = 0;
        for (std::size_t k = 0; k < w && count < 2; ++k) {
          count += static_cast<std::size_t>(std::popcount(ab[k] & ac[k] & bc[k]));
        }
        if (count != 1) {
          return MedianViolation{static_cast<VertexId>(a), static_cast<VertexId>(b),
                                 static_cast<VertexId>(c), count};
        }
      }
    }
  }
  return std::nullopt;
}

struct Square {
  VertexId a, b, c, d;  // cycle a-b-d-c
};

std::vector<Square> find_squares(const std::vector<std::vector<VertexId>>& adjacency) {
  std::vector<Square> squares;
  const std::size_t n = adjacency.size();
  std::vector<int> mark(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& na = adjacency[a];
    for (std::size_t i = 0; i < na.size(); ++i) {
      VertexId b = na[i];
      for (VertexId d : adjacency[b]) {
        if (d != static_cast<VertexId>(a)) mark[d] = b;
      }
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        VertexId c = na[j];
        for (VertexId d : adjacency[c]) {
          if (d != static_cast<VertexId>(a) && mark[d] == b && d > static_cast<VertexId>(a)) {
            // Each square is reported once from its smallest vertex.
            if (b > static_cast<VertexId>(a) && c > static_cast<VertexId>(a)) {
              squares.push_back({static_cast<VertexId>(a), b, c, d});
            }
          }
        }
      }
      for (VertexId d : adjacency[b]) mark[d] = -1;
    }
  }
  return squares;
}

}  // namespace

bool Cube::spans(HyperplaneId h) const {
  return std::binary_search(directions.begin(), directions.end(), h);
}

std::vector<VertexId> Cube::vertex_set() const {
  std::vector<VertexId> out = corners;
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_graph(std::span<const std::string> names,
                                std::span<const std::pair<VertexId, VertexId>> edges) {
  return CubeComplex::analyze(std::vector<std::string>(names.begin(), names.end()), edges,
                              nullptr);
}

CubeComplex CubeComplex::from_graph(std::vector<std::string> names,
                                    std::span<const std::pair<VertexId, VertexId>> edges) {
  CubeComplex complex;
  ValidationReport report = analyze(std::move(names), edges, &complex);
  if (!report.valid()) throw ValidationError(report.message);
  return complex;
}

ValidationReport CubeComplex::analyze(std::vector<std::string> names,
                                      std::span<const std::pair<VertexId, VertexId>> edges,
                                      CubeComplex* out) {
  if (names.empty()) throw StructuralError("complex has no vertices");
  const std::size_t n = names.size();
  std::map<std::string, VertexId> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(names[i], static_cast<VertexId>(i)).second) {
      throw StructuralError("duplicate vertex '" + names[i] + "'");
    }
  }
  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw StructuralError("edge references an unknown vertex");
    }
    if (a == b) throw StructuralError("self-loop at vertex '" + names[a] + "'");
    edge_list.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (std::size_t i = 1; i < edge_list.size(); ++i) {
    if (edge_list[i] == edge_list[i - 1]) {
      throw StructuralError("duplicate edge '" + names[edge_list[i].u] + "' -- '" +
                            names[edge_list[i].v] + "'");
    }
  }

  ValidationReport report;
  report.simple = true;

  std::vector<std::vector<VertexId>> adjacency(n);
  for (const Edge& e : edge_list) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& row : adjacency) std::sort(row.begin(), row.end());

  {
    std::vector<bool> seen(n, false);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (VertexId y : adjacency[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          queue.push(y);
        }
      }
    }
    report.connected = reached == n;
  }
  if (!report.connected) {
    report.message = "graph is not connected";
    return report;
  }

  CubeComplex local;
  CubeComplex& cx = out ? *out : local;
  cx.names_ = std::move(names);
  cx.name_index_ = std::move(index);
  cx.edges_ = std::move(edge_list);
  cx.adjacency_ = std::move(adjacency);

  auto describe_triple = [&](const MedianViolation& v) {
    std::ostringstream msg;
    msg << "not median: vertices " << cx.names_[v.a] << ", " << cx.names_[v.b] << ", "
        << cx.names_[v.c] << " have " << v.median_count << " medians";
    return msg.str();
  };

  if (n <= kIntervalTableLimit) {
    auto dist = all_pairs_distances(cx.adjacency_);
    if (n >= 3) report.violation = find_median_violation(dist);
    if (report.violation) {
      report.message = describe_triple(*report.violation);
      return report;
    }
    report.median = true;
    cx.build_hyperplanes();
  } else {
    // Majority closure: median iff the halfspace coordinates embed the graph
    // isometrically in a hypercube and the coordinatewise majority of any
    // three vertices is a vertex.
    try {
      cx.build_hyperplanes();
    } catch (const ValidationError& e) {
      report.message = e.what();
      return report;
    }
    auto dist = all_pairs_distances(cx.adjacency_);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (cx.distance(static_cast<VertexId>(a), static_cast<VertexId>(b)) != dist[a][b]) {
          report.message = "not median: halfspace coordinates are not isometric";
          return report;
        }
      }
    }
    std::unordered_set<std::string> rows;
    auto key = [](const std::vector<std::uint64_t>& r) {
      return std::string(reinterpret_cast<const char*>(r.data()), r.size() * 8);
    };
    for (const auto& r : cx.coords_) rows.insert(key(r));
    const std::size_t w = cx.coords_[0].size();
    std::vector<std::uint64_t> maj(w);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t k = 0; k < w; ++k) {
            std::uint64_t x = cx.coords_[a][k], y = cx.coords_[b][k], z = cx.coords_[c][k];
            maj[k] = (x & y) | (x & z) | (y & z);
          }
          if (!rows.contains(key(maj))) {
            report.violation = MedianViolation{static_cast<VertexId>(a), static_cast<VertexId>(b),
                                               static_cast<VertexId>(c), 0};
            report.message = describe_triple(*report.violation);
            return report;
          }
        }
      }
    }
    report.median = true;
  }

  cx.build_cubes();

  // Flag condition: every clique in a vertex link spans a cube.
  report.flag_filled = true;
  for (std::size_t v = 0; v < n && report.flag_filled; ++v) {
    const auto& dirs = cx.flips_[v];
    const std::size_t k = dirs.size();
    std::vector<std::vector<bool>> link(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto far = cx.flip(dirs[i].second, dirs[j].first);
        if (far && cx.find_edge(*far, dirs[j].second)) link[i][j] = link[j][i] = true;
      }
    }
    std::vector<std::size_t> clique;
    auto extend = [&](auto&& self, std::size_t start) -> bool {
      if (clique.size() >= 2) {
        std::vector<HyperplaneId> hs;
        for (std::size_t i : clique) hs.push_back(dirs[i].first);
        std::sort(hs.begin(), hs.end());
        if (!cx.find_cube_at(static_cast<VertexId>(v), hs)) return false;
      }
      for (std::size_t i = start; i < k; ++i) {
        bool ok = std::all_of(clique.begin(), clique.end(),
                              [&](std::size_t j) { return link[i][j]; });
        if (!ok) continue;
        clique.push_back(i);
        bool fine = self(self, i + 1);
        clique.pop_back();
        if (!fine) return false;
      }
      return true;
    };
    if (!extend(extend, 0)) {
      report.flag_filled = false;
      report.message = "link of vertex '" + cx.names_[v] + "' is not flag";
    }
  }

  long long euler = 0;
  for (int d = 0; d <= cx.dimension(); ++d) {
    std::size_t count = cx.cube_count(d);
    report.cube_counts.push_back(count);
    euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count);
  }
  report.euler = euler;
  if (report.message.empty() && euler != 1) {
    report.message = "Euler characteristic is " + std::to_string(euler);
  }
  cx.report_ = report;
  return report;
}

void CubeComplex::build_hyperplanes() {
  const std::size_t n = names_.size();
  const std::size_t m = edges_.size();
  DisjointSets classes(m);
  for (const Square& sq : find_squares(adjacency_)) {
    // a-b-d-c: ab opposite cd, ac opposite bd.
    auto ab = *find_edge(sq.a, sq.b);
    auto cd = *find_edge(sq.c, sq.d);
    auto ac = *find_edge(sq.a, sq.c);
    auto bd = *find_edge(sq.b, sq.d);
    classes.unite(ab, cd);
    classes.unite(ac, bd);
  }
  // Classes are numbered by their minimal edge, edges being sorted.
  std::vector<int> class_of_root(m, -1);
  edge_hyperplane_.assign(m, -1);
  hyperplanes_.clear();
  for (std::size_t e = 0; e < m; ++e) {
    int root = classes.find(static_cast<int>(e));
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(hyperplanes_.size());
      hyperplanes_.push_back({});
      hyperplanes_.back().id = class_of_root[root];
    }
    edge_hyperplane_[e] = class_of_root[root];
    hyperplanes_[class_of_root[root]].dual_edges.push_back(static_cast<EdgeId>(e));
  }

  const std::size_t h_count = hyperplanes_.size();
  coords_.assign(n, std::vector<std::uint64_t>(words_for(std::max<std::size_t>(h_count, 1)), 0));
  flips_.assign(n, {});
  std::vector<int> component(n);
  for (Hyperplane& hp : hyperplanes_) {
    // Components of the graph with the dual edges removed.
    std::fill(component.begin(), component.end(), -1);
    int components = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (component[s] >= 0) continue;
      std::queue<VertexId> queue;
      queue.push(static_cast<VertexId>(s));
      component[s] = components;
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop();
        for (VertexId y : adjacency_[x]) {
          if (component[y] >= 0) continue;
          if (edge_hyperplane_[*find_edge(x, y)] == hp.id) continue;
          component[y] = components;
          queue.push(y);
        }
      }
      ++components;
    }
    if (components != 2) {
      throw ValidationError("edge class " + std::to_string(hp.id) + " splits the graph into " +
                            std::to_string(components) + " parts");
    }
    for (EdgeId e : hp.dual_edges) {
      if (component[edges_[e].u] == component[edges_[e].v]) {
        throw ValidationError("edge class " + std::to_string(hp.id) + " does not separate");
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (component[v] == component[0]) {
        hp.minus_side.push_back(static_cast<VertexId>(v));
      } else {
        hp.plus_side.push_back(static_cast<VertexId>(v));
        coords_[v][hp.id / 64] |= std::uint64_t{1} << (hp.id % 64);
      }
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    flips_[edges_[e].u].push_back({edge_hyperplane_[e], edges_[e].v});
    flips_[edges_[e].v].push_back({edge_hyperplane_[e], edges_[e].u});
  }
  for (auto& row : flips_) {
    std::sort(row.begin(), row.end());
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first == row[i - 1].first) {
        throw ValidationError("vertex '" + names_[&row - flips_.data()] +
                              "' has two edges in one class");
      }
    }
  }
}

void CubeComplex::build_cubes() {
  cubes_.clear();
  cube_index_.clear();
  cube_offsets_.clear();
  const std::size_t n = names_.size();
  cube_offsets_.push_back(0);
  for (std::size_t v = 0; v < n; ++v) {
    cubes_.push_back({{}, {static_cast<VertexId>(v)}});
    cube_index_[{static_cast<VertexId>(v), {}}] = static_cast<CubeId>(v);
  }
  cube_offsets_.push_back(static_cast<CubeId>(cubes_.size()));
  for (;;) {
    const CubeId begin = cube_offsets_[cube_offsets_.size() - 2];
    const CubeId end = cube_offsets_.back();
    for (CubeId q = begin; q < end; ++q) {
      // Copy: cubes_ grows below.
      const Cube face = cubes_[q];
      const HyperplaneId floor = face.directions.empty() ? -1 : face.directions.back();
      for (auto [h, across] : flips_[face.base()]) {
        if (h <= floor || side(face.base(), h) != Side::kMinus) continue;
        auto other = cube_index_.find({across, face.directions});
        if (other == cube_index_.end()) continue;
        Cube grown;
        grown.directions = face.directions;
        grown.directions.push_back(h);
        grown.corners = face.corners;
        const Cube& top = cubes_[other->second];
        grown.corners.insert(grown.corners.end(), top.corners.begin(), top.corners.end());
        cube_index_[{grown.base(), grown.directions}] = static_cast<CubeId>(cubes_.size());
        cubes_.push_back(std::move(grown));
      }
    }
    if (static_cast<CubeId>(cubes_.size()) == end) break;
    cube_offsets_.push_back(static_cast<CubeId>(cubes_.size()));
  }

  maximal_.assign(cubes_.size(), true);
  for (const Cube& c : cubes_) {
    const int d = c.dimension();
    for (int i = 0; i < d; ++i) {
      std::vector<HyperplaneId> facet = c.directions;
      facet.erase(facet.begin() + i);
      maximal_[*find_cube(c.corners[0], facet)] = false;
      maximal_[*find_cube(c.corners[std::size_t{1} << i], facet)] = false;
    }
  }
}

std::optional<VertexId> CubeComplex::find_vertex(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> CubeComplex::find_edge(VertexId a, VertexId b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Side CubeComplex::side(VertexId v, HyperplaneId h) const {
  return ((coords_[v][h / 64] >> (h % 64)) & 1U) ? Side::kPlus : Side::kMinus;
}

std::optional<VertexId> CubeComplex::flip(VertexId v, HyperplaneId h) const {
  const auto& row = flips_[v];
  auto it = std::lower_bound(row.begin(), row.end(), std::pair<HyperplaneId, VertexId>{h, -1});
  if (it == row.end() || it->first != h) return std::nullopt;
  return it->second;
}

std::span<const Cube> CubeComplex::cubes(int dimension) const {
  if (dimension < 0 || dimension > this->dimension()) return {};
  return std::span<const Cube>(cubes_).subspan(
      cube_offsets_[dimension], cube_offsets_[dimension + 1] - cube_offsets_[dimension]);
}

CubeId CubeComplex::first_cube_of_dimension(int dimension) const {
  return cube_offsets_[std::clamp(dimension, 0, this->dimension() + 1)];
}

std::size_t CubeComplex::cube_count(int dimension) const { return cubes(dimension).size(); }

std::optional<CubeId> CubeComplex::find_cube(VertexId base,
                                             std::span<const HyperplaneId> directions) const {
  auto it = cube_index_.find({base, std::vector<HyperplaneId>(directions.begin(), directions.end())});
  if (it == cube_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CubeId> CubeComplex::find_cube_at(VertexId corner,
                                                std::span<const HyperplaneId> directions) const {
  std::vector<HyperplaneId> sorted(directions.begin(), directions.end());
  std::sort(sorted.begin(), sorted.end());
  VertexId base = corner;
  for (HyperplaneId h : sorted) {
    if (side(base, h) == Side::kPlus) {
      auto next = flip(base, h);
      if (!next) return std::nullopt;
      base = *next;
    }
  }
  return find_cube(base, sorted);
}

std::vector<CubeId> CubeComplex::maximal_cubes() const {
  std::vector<CubeId> out;
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (maximal_[i]) out.push_back(static_cast<CubeId>(i));
  }
  return out;
}

std::vector<CubeId> CubeComplex::carrier(HyperplaneId h) const {
  std::vector<CubeId> out;
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (cubes_[i].spans(h)) out.push_back(static_cast<CubeId>(i));
  }
  return out;
}

int CubeComplex::distance(VertexId a, VertexId b) const {
  int d = 0;
  for (std::size_t k = 0; k < coords_[a].size(); ++k) {
    d += std::popcount(coords_[a][k] ^ coords_[b][k]);
  }
  return d;
}

std::vector<HyperplaneId> CubeComplex::crossing_set(VertexId a, VertexId b) const {
  std::vector<HyperplaneId> out;
  for (std::size_t k = 0; k < coords_[a].size(); ++k) {
    std::uint64_t diff = coords_[a][k] ^ coords_[b][k];
    while (diff) {
      int bit = std::countr_zero(diff);
      out.push_back(static_cast<HyperplaneId>(k * 64 + bit));
      diff &= diff - 1;
    }
  }
  return out;
}

std::vector<VertexId> CubeComplex::convex_hull(std::span<const VertexId> vertices) const {
  if (vertices.empty()) throw PreconditionError("convex hull of an empty vertex set");
  // A vertex is in the hull iff no halfspace containing the set excludes it.
  const std::size_t w = coords_[0].size();
  std::vector<std::uint64_t> all_plus(w, ~std::uint64_t{0}), all_minus(w, ~std::uint64_t{0});
  for (VertexId v : vertices) {
    for (std::size_t k = 0; k < w; ++k) {
      all_plus[k] &= coords_[v][k];
      all_minus[k] &= ~coords_[v][k];
    }
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    bool inside = true;
    for (std::size_t k = 0; k < w && inside; ++k) {
      if ((~coords_[v][k] & all_plus[k]) || (coords_[v][k] & all_minus[k])) inside = false;
    }
    if (inside) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> CubeComplex::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace panelcollapse
