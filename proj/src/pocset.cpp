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

#include "panelcollapse/pocset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

std::uint64_t bit(std::size_t w) { return std::uint64_t{1} << w; }

}  // namespace

Wallspace::Wallspace(std::vector<std::string> points,
                     std::vector<std::pair<std::vector<int>, std::vector<int>>> walls,
                     std::vector<PointPermutation> symmetries)
    : points_(std::move(points)), symmetries_(std::move(symmetries)) {
  const int n = static_cast<int>(points_.size());
  if (n == 0) throw StructuralError("wallspace has no points");
  if (std::set<std::string>(points_.begin(), points_.end()).size() != points_.size()) {
    throw StructuralError("wallspace has duplicate points");
  }
  if (walls.size() > kMaxWalls) {
    throw StructuralError("wallspace has more than " + std::to_string(kMaxWalls) + " walls");
  }
  std::set<Wall> seen;
  for (std::size_t w = 0; w < walls.size(); ++w) {
    auto [a, b] = walls[w];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::string label = "wall " + std::to_string(w);
    if (a.empty() || b.empty()) throw StructuralError(label + " has an empty side");
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (all != expected) throw StructuralError(label + " does not partition the points");
    Wall wall = a < b ? Wall{a, b} : Wall{b, a};
    if (!seen.insert(wall).second) throw StructuralError(label + " duplicates an earlier wall");
    walls_.push_back(std::move(wall));
  }
  for (std::size_t i = 0; i < symmetries_.size(); ++i) {
    const PointPermutation& g = symmetries_[i];
    std::vector<int> sorted(g);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) {
      throw StructuralError("symmetry " + std::to_string(i + 1) + " is not a permutation");
    }
    for (std::size_t w = 0; w < walls_.size(); ++w) {
      try {
        wall_image(g, w);
      } catch (const PreconditionError&) {
        throw StructuralError("symmetry " + std::to_string(i + 1) + " does not permute the walls");
      }
    }
  }
}

bool Wallspace::on_second_side(int p, std::size_t w) const {
  return std::binary_search(walls_[w].second.begin(), walls_[w].second.end(), p);
}

std::size_t Wallspace::wall_image(const PointPermutation& g, std::size_t w) const {
  std::vector<int> a, b;
  for (int p : walls_[w].first) a.push_back(g[p]);
  for (int p : walls_[w].second) b.push_back(g[p]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Wall image = a < b ? Wall{a, b} : Wall{b, a};
  auto it = std::find(walls_.begin(), walls_.end(), image);
  if (it == walls_.end()) throw PreconditionError("permutation does not map walls to walls");
  return static_cast<std::size_t>(it - walls_.begin());
}

DualComplex dualize(const Wallspace& space) {
  const std::size_t walls = space.walls().size();
  const int n = static_cast<int>(space.point_count());
  // meets[(w,s)][(u,t)]: side s of wall w meets side t of wall u.
  std::vector<std::vector<bool>> meets(2 * walls, std::vector<bool>(2 * walls, false));
  {
    std::vector<std::vector<bool>> members(2 * walls, std::vector<bool>(n, false));
    for (std::size_t w = 0; w < walls; ++w) {
      for (int p = 0; p < n; ++p) members[2 * w + (space.on_second_side(p, w) ? 1 : 0)][p] = true;
    }
    for (std::size_t x = 0; x < 2 * walls; ++x) {
      for (std::size_t y = 0; y < 2 * walls; ++y) {
        for (int p = 0; p < n && !meets[x][y]; ++p) meets[x][y] = members[x][p] && members[y][p];
      }
    }
  }
  auto principal = [&](int p) {
    std::uint64_t o = 0;
    for (std::size_t w = 0; w < walls; ++w) {
      if (space.on_second_side(p, w)) o |= bit(w);
    }
    return o;
  };
  auto chosen = [&](std::uint64_t o, std::size_t w) { return 2 * w + ((o >> w) & 1U); };

  std::vector<std::uint64_t> orientation{principal(0)};
  std::map<std::uint64_t, VertexId> index{{orientation[0], 0}};
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::size_t next = 0; next < orientation.size(); ++next) {
    const std::uint64_t o = orientation[next];
    for (std::size_t w = 0; w < walls; ++w) {
      const std::uint64_t flipped = o ^ bit(w);
      bool consistent = true;
      for (std::size_t u = 0; u < walls && consistent; ++u) {
        if (u != w && !meets[chosen(flipped, w)][chosen(flipped, u)]) consistent = false;
      }
      if (!consistent) continue;
      auto [it, fresh] = index.emplace(flipped, static_cast<VertexId>(orientation.size()));
      if (fresh) orientation.push_back(flipped);
      const VertexId a = static_cast<VertexId>(next);
      edges.insert({std::min(a, it->second), std::max(a, it->second)});
    }
  }

  std::map<std::uint64_t, std::string> principal_names;
  for (int p = 0; p < n; ++p) {
    std::string& name = principal_names[principal(p)];
    name += (name.empty() ? "" : "=") + space.point(p);
  }
  std::vector<std::string> names;
  for (std::uint64_t o : orientation) {
    auto it = principal_names.find(o);
    if (it != principal_names.end()) {
      names.push_back(it->second);
    } else {
      std::string bits = "<";
      for (std::size_t w = 0; w < walls; ++w) bits += ((o >> w) & 1U) ? '1' : '0';
      names.push_back(bits + ">");
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edge_list(edges.begin(), edges.end());
  DualComplex dual{CubeComplex::from_graph(std::move(names), edge_list), orientation, {}, {},
                   std::vector<bool>(walls, false)};
  for (int p = 0; p < n; ++p) {
    auto it = index.find(principal(p));
    if (it == index.end()) throw InvariantError("principal orientation outside the flip component");
    dual.point_vertex.push_back(it->second);
  }
  for (const Hyperplane& hp : dual.complex.hyperplanes()) {
    const Edge& e = dual.complex.edge(hp.dual_edges.front());
    std::uint64_t diff = orientation[e.u] ^ orientation[e.v];
    int w = std::countr_zero(diff);
    dual.wall_of_hyperplane.push_back(w);
    dual.wall_realized[w] = true;
  }
  return dual;
}

Automorphism induced_automorphism(const Wallspace& space, const DualComplex& dual,
                                  const PointPermutation& g) {
  const std::size_t walls = space.walls().size();
  std::map<std::uint64_t, VertexId> index;
  for (std::size_t v = 0; v < dual.orientation.size(); ++v) {
    index[dual.orientation[v]] = static_cast<VertexId>(v);
  }
  std::vector<std::size_t> image_wall(walls);
  std::vector<bool> swaps(walls);
  for (std::size_t w = 0; w < walls; ++w) {
    image_wall[w] = space.wall_image(g, w);
    swaps[w] = space.on_second_side(g[space.walls()[w].first.front()], image_wall[w]);
  }
  Automorphism out;
  for (std::uint64_t o : dual.orientation) {
    std::uint64_t image = 0;
    for (std::size_t w = 0; w < walls; ++w) {
      bool second = ((o >> w) & 1U) != 0;
      if (second != swaps[w]) image |= bit(image_wall[w]);
    }
    auto it = index.find(image);
    if (it == index.end()) throw InvariantError("symmetry leaves the flip component");
    out.image.push_back(it->second);
  }
  return out;
}

StallingsResult stallings_pipeline(const Wallspace& space) {
  DualComplex dual = dualize(space);

  std::vector<PointPermutation> group;
  {
    PointPermutation id(space.point_count());
    std::iota(id.begin(), id.end(), 0);
    std::set<PointPermutation> seen{id};
    group.push_back(id);
    for (std::size_t next = 0; next < group.size(); ++next) {
      for (const PointPermutation& s : space.symmetries()) {
        PointPermutation product(id.size());
        for (std::size_t p = 0; p < id.size(); ++p) product[p] = s[group[next][p]];
        if (seen.insert(product).second) {
          if (group.size() >= GroupAction::kDefaultLimit) {
            throw PreconditionError("symmetry group is too large");
          }
          group.push_back(std::move(product));
        }
      }
    }
  }

  std::vector<Automorphism> generators;
  for (const PointPermutation& s : space.symmetries()) {
    generators.push_back(induced_automorphism(space, dual, s));
  }
  GroupAction action = GroupAction::generate(dual.complex, generators);
  CubeComplex working = dual.complex;
  std::optional<Subdivision> sub;
  if (!check_action(dual.complex, action).inversion_free()) {
    sub = subdivide(dual.complex);
    action = push_forward(dual.complex, *sub, action);
    working = sub->complex;
  }

  StallingsResult result{std::move(dual), group.size(), sub.has_value(),
                         run_to_tree(working, action), {}, {}, 0};
  result.dimension = result.dual.complex.dimension();

  std::vector<Automorphism> elements;
  for (const PointPermutation& g : group) {
    Automorphism a = induced_automorphism(space, result.dual, g);
    if (sub) {
      Automorphism lifted;
      for (CubeId c : sub->cube_of_vertex) {
        lifted.image.push_back(image_of_cube(result.dual.complex, a, c));
      }
      a = std::move(lifted);
    }
    elements.push_back(std::move(a));
  }
  for (std::size_t w = 0; w < space.walls().size(); ++w) {
    std::size_t count = 0;
    for (const PointPermutation& g : group) count += space.wall_image(g, w) == w ? 1 : 0;
    result.wall_stabilizers.push_back(count);
  }

  // Walls behind a hyperplane of the complex the driver ran on.
  auto wall_of = [&](HyperplaneId h) -> std::size_t {
    if (!sub) return result.dual.wall_of_hyperplane[h];
    const Edge& e = working.edge(working.hyperplane(h).dual_edges.front());
    const Cube& a = result.dual.complex.cube(sub->cube_of_vertex[e.u]);
    const Cube& b = result.dual.complex.cube(sub->cube_of_vertex[e.v]);
    const Cube& big = a.dimension() > b.dimension() ? a : b;
    const Cube& small = a.dimension() > b.dimension() ? b : a;
    for (HyperplaneId d : big.directions) {
      if (!small.spans(d)) return result.dual.wall_of_hyperplane[d];
    }
    throw InvariantError("subdivision edge joins cubes of equal dimension");
  };

  // An edge stabiliser permutes the walls its edge crosses, so it is
  // virtually contained in a wall stabiliser: for some crossed wall W,
  // |Stab(e)| = |Stab(e) . W| * |Stab(e) n Stab(W)| divides
  // |Stab(W)| * |Stab(e) . W|.
  const CubeComplex& tree = result.run.final_complex;
  for (const Edge& e : tree.edges()) {
    std::vector<std::size_t> stabilizer;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      VertexId x = elements[i].image[e.u], y = elements[i].image[e.v];
      if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) stabilizer.push_back(i);
    }
    result.edge_stabilizers.push_back(stabilizer.size());
    std::set<std::size_t> walls;
    for (HyperplaneId h : working.crossing_set(e.u, e.v)) walls.insert(wall_of(h));
    if (walls.empty()) throw InvariantError("tree edge crosses no wall");
    bool controlled = false;
    for (std::size_t w : walls) {
      std::set<std::size_t> orbit;
      for (std::size_t i : stabilizer) orbit.insert(space.wall_image(group[i], w));
      if (!std::includes(walls.begin(), walls.end(), orbit.begin(), orbit.end())) {
        throw InvariantError("edge stabiliser moves a crossed wall off the edge");
      }
      if ((result.wall_stabilizers[w] * orbit.size()) % stabilizer.size() == 0) controlled = true;
    }
    if (!controlled) throw InvariantError("edge stabiliser is not controlled by a wall stabiliser");
  }
  return result;
}

}  // namespace panelcollapse
