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

#include "panelcollapse/random.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

CubeComplex hypercube(int dimension) {
  if (dimension < 0 || dimension > 12) throw PreconditionError("hypercube dimension out of range");
  const int n = 1 << dimension;
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    std::string name;
    for (int i = 0; i < dimension; ++i) name += ((v >> i) & 1) ? '1' : '0';
    names.push_back(dimension == 0 ? "o" : name);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < dimension; ++i) {
      if (!((v >> i) & 1)) edges.push_back({v, v | (1 << i)});
    }
  }
  return CubeComplex::from_graph(std::move(names), edges);
}

CubeComplex path_complex(int edges) {
  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> list;
  for (int i = 0; i <= edges; ++i) {
    names.push_back("p" + std::to_string(i));
    if (i) list.push_back({i - 1, i});
  }
  return CubeComplex::from_graph(std::move(names), list);
}

CubeComplex star_complex(int leaves) {
  std::vector<std::string> names{"c"};
  std::vector<std::pair<VertexId, VertexId>> list;
  for (int i = 1; i <= leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    list.push_back({0, i});
  }
  return CubeComplex::from_graph(std::move(names), list);
}

CubeComplex product(const CubeComplex& first, const CubeComplex& second) {
  const auto n2 = static_cast<VertexId>(second.vertex_count());
  std::vector<std::string> names;
  for (const std::string& a : first.names()) {
    for (const std::string& b : second.names()) names.push_back(a + "." + b);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : first.edges()) {
    for (VertexId j = 0; j < n2; ++j) edges.push_back({e.u * n2 + j, e.v * n2 + j});
  }
  for (VertexId i = 0; i < static_cast<VertexId>(first.vertex_count()); ++i) {
    for (const Edge& e : second.edges()) edges.push_back({i * n2 + e.u, i * n2 + e.v});
  }
  return CubeComplex::from_graph(std::move(names), edges);
}

CubeComplex grid_complex(int rows, int columns) {
  return product(path_complex(rows), path_complex(columns));
}

CubeComplex random_tree(Rng& rng, int vertices) {
  std::vector<std::string> names{"t0"};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i < vertices; ++i) {
    names.push_back("t" + std::to_string(i));
    edges.push_back({uniform(rng, 0, i - 1), i});
  }
  return CubeComplex::from_graph(std::move(names), edges);
}

CubeComplex random_convex_subcomplex(const CubeComplex& complex, Rng& rng, int cuts) {
  const int n = static_cast<int>(complex.vertex_count());
  const VertexId base = uniform(rng, 0, n - 1);
  std::vector<bool> keep(n, true);
  const int hyperplanes = static_cast<int>(complex.hyperplane_count());
  for (int i = 0; i < cuts && hyperplanes > 0; ++i) {
    HyperplaneId h = uniform(rng, 0, hyperplanes - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (complex.side(v, h) != complex.side(base, h)) keep[v] = false;
    }
  }
  std::vector<VertexId> renumber(n, -1);
  std::vector<std::string> names;
  for (VertexId v = 0; v < n; ++v) {
    if (keep[v]) {
      renumber[v] = static_cast<VertexId>(names.size());
      names.push_back(complex.name(v));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : complex.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({renumber[e.u], renumber[e.v]});
  }
  return CubeComplex::from_graph(std::move(names), edges);
}

CubeComplex random_complex(Rng& rng, int max_dimension, int max_vertices) {
  const int factors = uniform(rng, 1, std::max(1, max_dimension));
  const double cap = 2.0 * max_vertices;
  const int largest = std::max(2, static_cast<int>(std::floor(std::pow(cap, 1.0 / factors))));
  CubeComplex result = random_tree(rng, uniform(rng, 2, largest));
  for (int i = 1; i < factors; ++i) result = product(result, random_tree(rng, uniform(rng, 2, largest)));
  result = random_convex_subcomplex(result, rng, uniform(rng, 0, 2));
  while (static_cast<int>(result.vertex_count()) > max_vertices) {
    result = random_convex_subcomplex(result, rng, 1);
  }
  return result;
}

Wallspace random_wallspace(Rng& rng, int points, int walls) {
  std::vector<std::string> names;
  for (int p = 0; p < points; ++p) names.push_back("x" + std::to_string(p));
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> list;
  for (int attempt = 0; attempt < 50 * walls && static_cast<int>(list.size()) < walls; ++attempt) {
    std::vector<int> a, b;
    for (int p = 0; p < points; ++p) (uniform(rng, 0, 1) ? a : b).push_back(p);
    if (a.empty() || b.empty()) continue;
    if (!seen.insert(std::min(a, b)).second) continue;
    list.push_back({a, b});
  }
  return Wallspace(std::move(names), std::move(list));
}

GroupAction random_inversion_free_action(const CubeComplex& complex, Rng& rng) {
  std::vector<Automorphism> autos = automorphisms(complex, 512);
  std::erase_if(autos, [](const Automorphism& a) { return a.is_identity(); });
  std::shuffle(autos.begin(), autos.end(), rng);
  for (std::size_t i = 0; i < autos.size() && i < 24; ++i) {
    std::vector<Automorphism> gens{autos[i]};
    if (i + 1 < autos.size() && uniform(rng, 0, 2) == 0) gens.push_back(autos[i + 1]);
    try {
      GroupAction action = GroupAction::generate(complex, gens, 256);
      if (check_action(complex, action).inversion_free()) return action;
    } catch (const PreconditionError&) {
      // Group too large; try another.
    }
  }
  return GroupAction::trivial(complex);
}

SymmetricInstance symmetric_power(const CubeComplex& tree, int k) {
  const auto n = static_cast<VertexId>(tree.vertex_count());
  CubeComplex power = tree;
  for (int i = 1; i < k; ++i) power = product(power, tree);
  // Vertex id is the base-n number (x_0 ... x_{k-1}) with x_0 most significant.
  Automorphism shift;
  const auto total = static_cast<VertexId>(power.vertex_count());
  VertexId high = 1;
  for (int i = 1; i < k; ++i) high *= n;
  for (VertexId v = 0; v < total; ++v) shift.image.push_back((v % high) * n + v / high);
  GroupAction action = GroupAction::generate(power, {shift});
  return {std::move(power), std::move(action)};
}

FuzzSummary run_fuzz(std::uint64_t seed, int count) {
  FuzzSummary summary;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    try {
      std::optional<CubeComplex> complex;
      std::optional<GroupAction> action;
      switch (uniform(rng, 0, 3)) {
        case 0: {
          auto inst = symmetric_power(random_tree(rng, uniform(rng, 2, 5)), uniform(rng, 2, 3));
          complex = std::move(inst.complex);
          action = std::move(inst.action);
          break;
        }
        case 1: {
          DualComplex dual = dualize(random_wallspace(rng, uniform(rng, 3, 7), uniform(rng, 1, 6)));
          if (dual.complex.dimension() > 4 || dual.complex.vertex_count() > 200) continue;
          complex = dual.complex;
          break;
        }
        default:
          complex = random_complex(rng, 4, 200);
          break;
      }
      if (!action) action = random_inversion_free_action(*complex, rng);
      ++summary.complexes;
      if (action->order() > 1) ++summary.nontrivial_actions;
      std::size_t bound = 0;
      for (int d = 2; d <= complex->dimension(); ++d) bound += complex->cube_count(d);
      RunResult run = run_to_tree(*complex, *action);
      summary.steps += run.steps.size();
      summary.max_steps = std::max(summary.max_steps, run.steps.size());
      if (run.steps.size() > bound) ++summary.over_step_bound;
    } catch (const Error& e) {
      if (summary.failures++ == 0) summary.first_failure = e.what();
    }
  }
  return summary;
}

}  // namespace panelcollapse
