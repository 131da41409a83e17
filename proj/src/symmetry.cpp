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

#include "panelcollapse/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

void check_permutation(const CubeComplex& complex, const Automorphism& g, std::size_t index) {
  const std::size_t n = complex.vertex_count();
  const std::string label = "generator " + std::to_string(index + 1);
  if (g.image.size() != n) throw StructuralError(label + " does not cover every vertex");
  std::vector<bool> hit(n, false);
  for (VertexId v : g.image) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) {
      throw StructuralError(label + " is not a bijection");
    }
    hit[v] = true;
  }
  for (const Edge& e : complex.edges()) {
    if (!complex.find_edge(g.image[e.u], g.image[e.v])) {
      throw StructuralError(label + " maps edge " + complex.name(e.u) + " -- " +
                            complex.name(e.v) + " to a non-edge");
    }
  }
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Automorphism Automorphism::identity(std::size_t n) {
  Automorphism a;
  a.image.resize(n);
  std::iota(a.image.begin(), a.image.end(), 0);
  return a;
}

bool Automorphism::is_identity() const {
  for (std::size_t v = 0; v < image.size(); ++v) {
    if (image[v] != static_cast<VertexId>(v)) return false;
  }
  return true;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  Automorphism out;
  out.image.resize(b.image.size());
  for (std::size_t v = 0; v < b.image.size(); ++v) out.image[v] = a.image[b.image[v]];
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.image.resize(image.size());
  for (std::size_t v = 0; v < image.size(); ++v) out.image[image[v]] = static_cast<VertexId>(v);
  return out;
}

GroupAction GroupAction::generate(const CubeComplex& complex,
                                  std::vector<Automorphism> generators, std::size_t limit) {
  for (std::size_t i = 0; i < generators.size(); ++i) check_permutation(complex, generators[i], i);
  GroupAction action;
  action.generators_ = std::move(generators);
  action.elements_.push_back(Automorphism::identity(complex.vertex_count()));
  std::set<Automorphism> seen(action.elements_.begin(), action.elements_.end());
  for (std::size_t next = 0; next < action.elements_.size(); ++next) {
    for (const Automorphism& g : action.generators_) {
      Automorphism product = g * action.elements_[next];
      if (seen.insert(product).second) {
        if (action.elements_.size() >= limit) {
          throw PreconditionError("group has more than " + std::to_string(limit) + " elements");
        }
        action.elements_.push_back(std::move(product));
      }
    }
  }
  return action;
}

GroupAction GroupAction::trivial(const CubeComplex& complex) { return generate(complex, {}); }

HyperplaneId image_of_hyperplane(const CubeComplex& complex, const Automorphism& g,
                                 HyperplaneId h) {
  const Edge& e = complex.edge(complex.hyperplane(h).dual_edges.front());
  auto image = complex.find_edge(g.image[e.u], g.image[e.v]);
  if (!image) throw InvariantError("automorphism does not preserve edges");
  return complex.edge_hyperplane(*image);
}

CubeId image_of_cube(const CubeComplex& complex, const Automorphism& g, CubeId c) {
  const Cube& cube = complex.cube(c);
  std::vector<HyperplaneId> dirs;
  for (HyperplaneId h : cube.directions) dirs.push_back(image_of_hyperplane(complex, g, h));
  auto image = complex.find_cube_at(g.image[cube.base()], dirs);
  if (!image) throw InvariantError("automorphism does not preserve cubes");
  return *image;
}

PanelKey image_of_panel(const CubeComplex& complex, const Automorphism& g, const Panel& panel) {
  PanelKey key;
  key.abutting = image_of_hyperplane(complex, g, panel.key.abutting);
  key.extremalising = image_of_hyperplane(complex, g, panel.key.extremalising);
  const Edge& e = complex.edge(panel.internal_edges.front());
  key.side = complex.side(g.image[e.u], key.extremalising);
  return key;
}

ActionReport check_action(const CubeComplex& complex, const GroupAction& action) {
  ActionReport report;
  report.order = action.order();
  report.inverted.assign(complex.hyperplane_count(), false);
  const auto elements = action.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    check_permutation(complex, elements[i], i);
    // g inverts a hyperplane it preserves iff it moves vertex 0 across it.
    const VertexId moved = elements[i].image[0];
    for (const Hyperplane& hp : complex.hyperplanes()) {
      if (image_of_hyperplane(complex, elements[i], hp.id) == hp.id &&
          complex.side(moved, hp.id) == Side::kPlus) {
        report.inverted[hp.id] = true;
        report.inversions.push_back({i, hp.id});
      }
    }
  }
  return report;
}

std::vector<Panel> panel_orbit(const CubeComplex& complex, const GroupAction& action,
                               const Panel& panel) {
  std::map<std::pair<HyperplaneId, std::vector<VertexId>>, Panel> distinct;
  for (const Automorphism& g : action.elements()) {
    PanelKey key = image_of_panel(complex, g, panel);
    if (!is_extremal(complex, key)) {
      throw InvariantError("image of an extremal panel is not extremal");
    }
    Panel image = make_panel(complex, key);
    auto id = std::pair{key.abutting, image.vertices};
    auto it = distinct.find(id);
    if (it == distinct.end()) {
      distinct.emplace(id, std::move(image));
    } else if (key < it->second.key) {
      it->second = std::move(image);
    }
  }
  std::vector<Panel> out;
  for (auto& [id, p] : distinct) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), [](const Panel& a, const Panel& b) { return a.key < b.key; });
  return out;
}

bool ComplexityVector::is_zero() const {
  for (std::size_t d = 2; d < counts.size(); ++d) {
    if (counts[d] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> ComplexityVector::entries(int top) const {
  if (top < 0) top = dimension();
  std::vector<std::size_t> out;
  for (int d = top; d >= 2; --d) out.push_back(d <= dimension() ? counts[d] : 0);
  return out;
}

std::string ComplexityVector::to_string(int top) const {
  std::string out = "(";
  auto e = entries(top);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const ComplexityVector& a, const ComplexityVector& b) {
  const int top = std::max(a.dimension(), b.dimension());
  for (int d = top; d >= 2; --d) {
    std::size_t x = d <= a.dimension() ? a.counts[d] : 0;
    std::size_t y = d <= b.dimension() ? b.counts[d] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

ComplexityVector complexity(const CubeComplex& complex, const GroupAction& action) {
  ComplexityVector vec;
  vec.counts.assign(static_cast<std::size_t>(complex.dimension()) + 1, 0);
  const CubeId first = complex.first_cube_of_dimension(2);
  const std::size_t total = complex.cubes().size();
  DisjointSets orbits(total);
  for (const Automorphism& g : action.elements()) {
    for (std::size_t c = first; c < total; ++c) {
      orbits.unite(c, image_of_cube(complex, g, static_cast<CubeId>(c)));
    }
  }
  for (std::size_t c = first; c < total; ++c) {
    if (orbits.find(c) == c) ++vec.counts[complex.cube(static_cast<CubeId>(c)).dimension()];
  }
  return vec;
}

Subdivision subdivide(const CubeComplex& complex) {
  std::vector<std::string> names;
  std::vector<CubeId> cube_of_vertex;
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto cubes = complex.cubes();
  for (std::size_t id = 0; id < cubes.size(); ++id) {
    const Cube& c = cubes[id];
    cube_of_vertex.push_back(static_cast<CubeId>(id));
    if (c.dimension() == 0) {
      names.push_back(complex.name(c.base()));
    } else {
      std::string name = "(";
      auto vs = c.vertex_set();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) name += "|";
        name += complex.name(vs[i]);
      }
      names.push_back(name + ")");
    }
    for (int i = 0; i < c.dimension(); ++i) {
      std::vector<HyperplaneId> facet = c.directions;
      facet.erase(facet.begin() + i);
      for (VertexId corner : {c.corners[0], c.corners[std::size_t{1} << i]}) {
        edges.push_back({*complex.find_cube(corner, facet), static_cast<VertexId>(id)});
      }
    }
  }
  return {CubeComplex::from_graph(std::move(names), edges), std::move(cube_of_vertex)};
}

GroupAction push_forward(const CubeComplex& complex, const Subdivision& sub,
                         const GroupAction& action) {
  std::vector<Automorphism> generators;
  for (const Automorphism& g : action.generators()) {
    Automorphism image;
    image.image.resize(sub.complex.vertex_count());
    for (std::size_t v = 0; v < image.image.size(); ++v) {
      image.image[v] = image_of_cube(complex, g, sub.cube_of_vertex[v]);
    }
    generators.push_back(std::move(image));
  }
  return GroupAction::generate(sub.complex, std::move(generators));
}

std::uint64_t provenance_digest(const CollapseResult& result) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto feed = [&](std::int64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash ^= static_cast<std::uint8_t>(value >> (8 * i));
      hash *= 1099511628211ULL;
    }
  };
  const CubeComplex& out = result.output;
  for (std::size_t e = 0; e < out.edge_count(); ++e) {
    feed(out.edge(static_cast<EdgeId>(e)).u);
    feed(out.edge(static_cast<EdgeId>(e)).v);
    for (HyperplaneId h : result.edge_crossings[e]) feed(h);
    feed(-1);
  }
  return hash;
}

std::optional<CollapseStep> equivariant_collapse_step(const CubeComplex& complex,
                                                      const GroupAction& action) {
  ActionReport report = check_action(complex, action);
  if (!report.inversion_free()) {
    throw PreconditionError("action inverts hyperplane " +
                            std::to_string(report.inversions.front().hyperplane) +
                            "; subdivide the complex first");
  }
  auto panel = find_extremal_panel(complex);
  if (!panel) return std::nullopt;
  std::vector<Panel> orbit = panel_orbit(complex, action, *panel);
  if (!no_facing_panels(complex, orbit)) {
    throw InvariantError("panel orbit of an inversion-free action has facing panels");
  }
  ComplexityVector before = complexity(complex, action);
  CollapseResult result = collapse(complex, orbit);

  std::vector<Automorphism> generators(action.generators().begin(), action.generators().end());
  GroupAction next;
  try {
    next = GroupAction::generate(result.output, std::move(generators));
  } catch (const Error& e) {
    throw InvariantError(std::string("action does not survive the collapse: ") + e.what());
  }
  if (!check_action(result.output, next).inversion_free()) {
    throw InvariantError("collapse introduced an inversion");
  }
  ComplexityVector after = complexity(result.output, next);
  if (!(after < before)) {
    throw InvariantError("complexity did not decrease: " + before.to_string() + " -> " +
                         after.to_string());
  }
  return CollapseStep{std::move(result), std::move(next), panel->key, orbit.size(),
                      std::move(before), std::move(after)};
}

RunResult run_to_tree(const CubeComplex& complex, const GroupAction& action) {
  RunResult run{{}, complex, action};
  const std::size_t limit = complex.cubes().size();
  while (auto step = equivariant_collapse_step(run.final_complex, run.final_action)) {
    if (run.steps.size() >= limit) throw InvariantError("collapse driver exceeded its step limit");
    run.final_complex = step->result.output;
    run.final_action = step->action;
    run.steps.push_back(std::move(*step));
  }
  if (!run.final_complex.is_tree() || !crossing_pairs(run.final_complex).empty()) {
    throw InvariantError("collapse driver stopped before reaching a tree");
  }
  // Same vertex set, same permutations: fixed vertices must agree.
  const auto before = action.elements();
  const auto after = run.final_action.elements();
  if (before.size() != after.size()) throw InvariantError("group changed during collapse");
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) throw InvariantError("group element changed during collapse");
  }
  return run;
}

std::vector<Automorphism> automorphisms(const CubeComplex& complex, std::size_t limit) {
  const std::size_t n = complex.vertex_count();
  std::vector<VertexId> order{0};
  std::vector<VertexId> parent(n, -1);
  std::vector<std::size_t> position(n, n);
  position[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : complex.neighbors(order[i])) {
      if (position[w] == n) {
        position[w] = order.size();
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> earlier_neighbors(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : complex.neighbors(static_cast<VertexId>(v))) {
      if (position[w] < position[v]) ++earlier_neighbors[v];
    }
  }

  std::vector<Automorphism> found;
  std::vector<VertexId> image(n, -1);
  std::vector<bool> used(n, false);
  auto fits = [&](VertexId v, VertexId candidate) {
    if (used[candidate] || complex.neighbors(v).size() != complex.neighbors(candidate).size()) {
      return false;
    }
    std::size_t used_neighbors = 0;
    for (VertexId w : complex.neighbors(candidate)) used_neighbors += used[w] ? 1 : 0;
    if (used_neighbors != earlier_neighbors[v]) return false;
    for (VertexId w : complex.neighbors(v)) {
      if (position[w] < position[v] && !complex.find_edge(image[w], candidate)) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (found.size() >= limit) return;
    if (i == n) {
      found.push_back({image});
      return;
    }
    const VertexId v = order[i];
    std::vector<VertexId> candidates;
    if (i == 0) {
      for (std::size_t c = 0; c < n; ++c) candidates.push_back(static_cast<VertexId>(c));
    } else {
      auto span = complex.neighbors(image[parent[v]]);
      candidates.assign(span.begin(), span.end());
    }
    for (VertexId c : candidates) {
      if (!fits(v, c)) continue;
      image[v] = c;
      used[c] = true;
      self(self, i + 1);
      used[c] = false;
      image[v] = -1;
    }
  };
  extend(extend, 0);
  return found;
}

}  // namespace panelcollapse
