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

#include "fundament_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace panelcollapse::oracle {
namespace {

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FundamentOracle::FundamentOracle(const CubeComplex& complex, std::span<const Panel> panels)
    : complex_(complex), panels_(panels.begin(), panels.end()) {}

std::vector<CubeId> FundamentOracle::subcubes(CubeId cube) const {
  const VertexSet outer = complex_.cube(cube).vertex_set();
  std::vector<CubeId> out;
  for (CubeId id = 0; id < static_cast<CubeId>(complex_.cubes().size()); ++id) {
    if (subset(complex_.cube(id).vertex_set(), outer)) out.push_back(id);
  }
  return out;
}

bool FundamentOracle::internal(CubeId cube) const {
  const Cube& c = complex_.cube(cube);
  const VertexSet vs = c.vertex_set();
  for (const Panel& p : panels_) {
    if (c.spans(p.key.abutting) && subset(vs, p.vertices)) return true;
  }
  return false;
}

bool FundamentOracle::edge_internal(VertexId a, VertexId b) const {
  const EdgeId e = *complex_.find_edge(a, b);
  for (const Panel& p : panels_) {
    if (std::binary_search(p.internal_edges.begin(), p.internal_edges.end(), e)) return true;
  }
  return false;
}

bool FundamentOracle::completely_external(CubeId cube) const {
  for (CubeId sub : subcubes(cube)) {
    if (complex_.cube(sub).dimension() == 1 && internal(sub)) return false;
  }
  return true;
}

OracleFundament FundamentOracle::fundament(CubeId cube) const {
  const Cube& c = complex_.cube(cube);
  const VertexSet vs = c.vertex_set();
  const std::vector<CubeId> subs = subcubes(cube);
  OracleFundament out;
  out.internal = internal(cube);
  out.completely_external = completely_external(cube);

  // D(c): completely external subcubes. Every vertex is one, so D(c) is
  // connected exactly when the external edges connect the vertices.
  std::set<VertexSet> d_cells;
  std::map<VertexId, std::vector<VertexId>> external_adjacency;
  for (CubeId sub : subs) {
    if (!completely_external(sub)) continue;
    const VertexSet sv = complex_.cube(sub).vertex_set();
    d_cells.insert(sv);
    if (sv.size() == 2) {
      external_adjacency[sv[0]].push_back(sv[1]);
      external_adjacency[sv[1]].push_back(sv[0]);
    }
  }
  std::set<VertexId> reached{vs.front()};
  std::vector<VertexId> stack{vs.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : external_adjacency[v]) {
      if (reached.insert(w).second) stack.push_back(w);
    }
  }
  out.d_connected = reached.size() == vs.size();

  if (out.internal) {
    out.cells = d_cells;
    return out;
  }

  // Persistent corners: every edge of c at the corner is external.
  std::vector<VertexId> corners;
  for (VertexId v : vs) {
    bool persistent = true;
    for (VertexId w : vs) {
      if (complex_.distance(v, w) == 1 && edge_internal(v, w)) persistent = false;
    }
    if (persistent) corners.push_back(v);
  }
  if (corners.empty()) throw std::logic_error("oracle: external cube without persistent corner");

  CubeId h = -1;
  for (CubeId sub : subs) {
    const VertexSet sv = complex_.cube(sub).vertex_set();
    if (!subset(corners, sv)) continue;
    if (h < 0 || complex_.cube(sub).dimension() < complex_.cube(h).dimension()) h = sub;
  }
  const Cube& hc = complex_.cube(h);

  // Separators of h and its salient copy.
  std::vector<HyperplaneId> separators;
  for (HyperplaneId dir : c.directions) {
    if (hc.spans(dir)) continue;
    bool has_internal = false;
    for (VertexId v : vs) {
      for (VertexId w : vs) {
        if (v < w && complex_.distance(v, w) == 1 && complex_.crossing_set(v, w).front() == dir &&
            edge_internal(v, w)) {
          has_internal = true;
        }
      }
    }
    if (has_internal) separators.push_back(dir);
  }
  // The copy of a subcube across exactly the separators.
  auto parallel_copy = [&](CubeId from) -> CubeId {
    const Cube& f = complex_.cube(from);
    for (CubeId sub : subs) {
      const Cube& s = complex_.cube(sub);
      if (s.directions != f.directions) continue;
      const std::vector<HyperplaneId> sep = complex_.crossing_set(f.base(), s.base());
      if (sep == separators) return sub;
    }
    throw std::logic_error("oracle: no parallel copy");
  };
  const CubeId hbar = parallel_copy(h);
  out.persistent = hc.vertex_set();
  out.salient = complex_.cube(hbar).vertex_set();

  if (out.d_connected) {
    out.cells = d_cells;
    return out;
  }

  // F0: fundaments of the codimension-1 faces holding a persistent corner.
  std::set<VertexSet> cells;
  for (CubeId sub : subs) {
    const Cube& s = complex_.cube(sub);
    if (s.dimension() != c.dimension() - 1) continue;
    const VertexSet sv = s.vertex_set();
    bool has_corner = std::any_of(corners.begin(), corners.end(), [&](VertexId v) {
      return std::binary_search(sv.begin(), sv.end(), v);
    });
    if (!has_corner) continue;
    const OracleFundament face = fundament(sub);
    cells.insert(face.cells.begin(), face.cells.end());
  }

  // F1: S(w) for every completely external w in the salient subcube, with
  // its faces S(w') and the two ends.
  const VertexSet hbar_set = complex_.cube(hbar).vertex_set();
  for (CubeId sub : subs) {
    const VertexSet w = complex_.cube(sub).vertex_set();
    if (!subset(w, hbar_set) || !completely_external(sub)) continue;
    const VertexSet wbar = complex_.cube(parallel_copy(sub)).vertex_set();
    cells.insert(unite(w, wbar));
    cells.insert(w);
    cells.insert(wbar);
  }

  // F: add the rest of D(c).
  cells.insert(d_cells.begin(), d_cells.end());
  out.cells = std::move(cells);
  return out;
}

}  // namespace panelcollapse::oracle
