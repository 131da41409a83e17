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

#include "panelcollapse/collapse.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

using VertexSet = std::vector<VertexId>;

VertexSet global_vertices(const Cube& cube, const std::vector<Mask>& local) {
  VertexSet out;
  out.reserve(local.size());
  for (Mask m : local) out.push_back(cube.corners[m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HyperplaneId> global_directions(const Cube& cube, Mask mask) {
  std::vector<HyperplaneId> out;
  for (int i = 0; i < cube.dimension(); ++i) {
    if (mask & (Mask{1} << i)) out.push_back(cube.directions[i]);
  }
  return out;
}

CubeId global_cube(const CubeComplex& complex, const Cube& cube, const Face& face) {
  auto dirs = global_directions(cube, face.free);
  auto id = complex.find_cube(cube.corners[face.base], dirs);
  if (!id) throw InvariantError("face of a cube is missing from the complex");
  return *id;
}

std::vector<VertexSet> cell_vertex_sets(const Cube& cube, const std::vector<Cell>& cells) {
  std::vector<VertexSet> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.push_back(global_vertices(cube, c.vertices()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string vertex_list(const CubeComplex& complex, const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += complex.name(vs[i]);
  }
  return out + "}";
}

}  // namespace

const char* to_string(CubeKind kind) {
  switch (kind) {
    case CubeKind::kInternal: return "internal";
    case CubeKind::kExternal: return "external";
    case CubeKind::kCompletelyExternal: return "completely-external";
  }
  return "?";
}

void check_panel_set(const CubeComplex& complex, std::span<const Panel> panels) {
  for (const Panel& p : panels) {
    Panel rebuilt = make_panel(complex, p.key);  // throws unless extremal
    if (rebuilt.vertices != p.vertices || rebuilt.internal_edges != p.internal_edges) {
      throw PreconditionError("panel " + to_string(p.key) + " does not match the complex");
    }
  }
  if (!no_facing_panels(complex, panels)) {
    throw PreconditionError("panel set fails the no facing panels property");
  }
}

CubeClassification classify(const CubeComplex& complex, std::span<const Panel> panels) {
  check_panel_set(complex, panels);
  CubeClassification cls;
  cls.internal_edge.assign(complex.edge_count(), false);
  cls.edge_witness.assign(complex.edge_count(), -1);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    for (EdgeId e : panels[i].internal_edges) {
      if (!cls.internal_edge[e]) cls.edge_witness[e] = static_cast<int>(i);
      cls.internal_edge[e] = true;
    }
  }
  const auto cubes = complex.cubes();
  cls.cube_kind.assign(cubes.size(), CubeKind::kCompletelyExternal);
  cls.cube_witness.assign(cubes.size(), -1);
  for (std::size_t id = 0; id < cubes.size(); ++id) {
    const Cube& c = cubes[id];
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const PanelKey& k = panels[i].key;
      if (c.spans(k.abutting) && !c.spans(k.extremalising) &&
          complex.side(c.base(), k.extremalising) == k.side) {
        cls.cube_kind[id] = CubeKind::kInternal;
        cls.cube_witness[id] = static_cast<int>(i);
        break;
      }
    }
    if (cls.cube_kind[id] == CubeKind::kInternal) continue;
    const int d = c.dimension();
    bool complete = true;
    for (Mask m = 0; m < (Mask{1} << d) && complete; ++m) {
      for (int i = 0; i < d; ++i) {
        if (m & (Mask{1} << i)) continue;
        if (cls.internal_edge[*complex.find_edge(c.corners[m], c.corners[m | (Mask{1} << i)])]) {
          complete = false;
          break;
        }
      }
    }
    if (!complete) cls.cube_kind[id] = CubeKind::kExternal;
  }
  return cls;
}

LocalCube local_cube(const CubeComplex& complex, std::span<const Panel> panels, CubeId cube) {
  const Cube& c = complex.cube(cube);
  auto index_of = [&](HyperplaneId h) {
    return static_cast<int>(std::lower_bound(c.directions.begin(), c.directions.end(), h) -
                            c.directions.begin());
  };
  std::vector<LocalPanel> traces;
  for (const Panel& p : panels) {
    if (!c.spans(p.key.abutting)) continue;
    LocalPanel t;
    t.abutting = index_of(p.key.abutting);
    if (c.spans(p.key.extremalising)) {
      t.extremalising = index_of(p.key.extremalising);
      t.side = p.key.side == Side::kPlus ? 1 : 0;
    } else if (complex.side(c.base(), p.key.extremalising) != p.key.side) {
      continue;
    }
    traces.push_back(t);
  }
  return LocalCube(c.dimension(), std::move(traces));
}

PersistentSubcube persistent_subcube(const CubeComplex& complex, std::span<const Panel> panels,
                                     CubeId cube) {
  Fundament f = fundament(complex, panels, cube);
  if (f.kind == CubeKind::kInternal) {
    throw PreconditionError("persistent subcube of an internal cube");
  }
  return *f.persistent;
}

Fundament fundament(const CubeComplex& complex, std::span<const Panel> panels, CubeId cube) {
  const Cube& c = complex.cube(cube);
  LocalCube lc = local_cube(complex, panels, cube);
  const LocalFundament& local = lc.fundament(lc.top());
  Fundament out;
  out.cube = cube;
  out.kind = local.internal ? CubeKind::kInternal
             : local.completely_external ? CubeKind::kCompletelyExternal
                                         : CubeKind::kExternal;
  out.d_connected = local.d_connected;
  if (!local.internal) {
    PersistentSubcube ps;
    ps.persistent = global_cube(complex, c, *local.persistent);
    ps.salient = global_cube(complex, c, *local.salient);
    ps.separators = global_directions(c, local.separators);
    ps.kappa = local.kappa;
    out.persistent = ps;
  }
  for (const Cell& cell : local.cells) {
    FundamentCell fc;
    fc.vertices = global_vertices(c, cell.vertices());
    fc.cube = global_cube(complex, c, cell.face);
    if (cell.is_diagonal()) {
      fc.opposite = global_cube(complex, c, {cell.face.free, cell.face.base ^ cell.separators});
      fc.separators = global_directions(c, cell.separators);
    }
    out.cells.push_back(std::move(fc));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const FundamentCell& a, const FundamentCell& b) { return a.vertices < b.vertices; });
  return out;
}

CollapseResult collapse(const CubeComplex& complex, std::span<const Panel> panels) {
  CubeClassification cls = classify(complex, panels);

  std::set<VertexSet> cells;
  std::map<std::pair<VertexId, VertexId>, std::vector<HyperplaneId>> edges;
  std::map<CubeId, std::vector<VertexSet>> face_fundaments;

  for (CubeId m : complex.maximal_cubes()) {
    const Cube& c = complex.cube(m);
    LocalCube lc = local_cube(complex, panels, m);
    const int d = c.dimension();
    for (Mask v = 0; v < (Mask{1} << d); ++v) {
      for (int i = 0; i < d; ++i) {
        if (v & (Mask{1} << i)) continue;
        EdgeId e = *complex.find_edge(c.corners[v], c.corners[v | (Mask{1} << i)]);
        if (lc.edge_internal(v, i) != cls.internal_edge[e]) {
          throw InvariantError("local and global internal edges disagree");
        }
      }
    }
    for (const Face& face : lc.subfaces(lc.top())) {
      CubeId id = global_cube(complex, c, face);
      CubeKind kind = cls.cube_kind[id];
      if (lc.internal(face) != (kind == CubeKind::kInternal) ||
          lc.completely_external(face) != (kind == CubeKind::kCompletelyExternal)) {
        throw InvariantError("local and global cube classification disagree");
      }
    }

    const LocalFundament& fund = lc.fundament(lc.top());
    for (const Cell& cell : fund.cells) {
      VertexSet vs = global_vertices(c, cell.vertices());
      if (cell.dimension() == 1) {
        std::vector<HyperplaneId> crossing =
            cell.is_diagonal() ? global_directions(c, cell.separators)
                               : global_directions(c, cell.face.free);
        auto [it, fresh] = edges.emplace(std::pair{vs[0], vs[1]}, crossing);
        if (!fresh && it->second != crossing) {
          throw InvariantError("edge " + vertex_list(complex, vs) + " has two crossing sets");
        }
      }
      cells.insert(std::move(vs));
    }

    // Fundaments of a shared external face agree whichever maximal cube
    // they are read from.
    for (const Face& face : lc.subfaces(lc.top())) {
      if (lc.internal(face)) continue;
      CubeId id = global_cube(complex, c, face);
      auto restricted = cell_vertex_sets(c, restrict_cells(fund.cells, face));
      auto [it, fresh] = face_fundaments.emplace(id, restricted);
      if (!fresh && it->second != restricted) {
        throw InvariantError("fundaments disagree on shared face " +
                             vertex_list(complex, complex.cube(id).vertex_set()));
      }
    }
  }

  std::vector<std::string> names(complex.names().begin(), complex.names().end());
  std::vector<std::pair<VertexId, VertexId>> edge_list;
  edge_list.reserve(edges.size());
  for (const auto& [uv, crossing] : edges) edge_list.push_back(uv);

  std::optional<CubeComplex> output;
  try {
    output = CubeComplex::from_graph(names, edge_list);
  } catch (const Error& e) {
    throw InvariantError(std::string("collapsed complex is not CAT(0): ") + e.what());
  }

  std::set<VertexSet> output_cubes;
  for (const Cube& q : output->cubes()) output_cubes.insert(q.vertex_set());
  if (output_cubes != cells) {
    throw InvariantError("canonical filling of the collapsed complex differs from the fundaments");
  }

  CollapseResult result{std::move(*output), {}, {}, {}, 0, 0};
  for (const Panel& p : panels) result.panels.push_back(p.key);
  const CubeComplex& out = result.output;
  result.edge_crossings.resize(out.edge_count());
  for (std::size_t e = 0; e < out.edge_count(); ++e) {
    const Edge& uv = out.edge(static_cast<EdgeId>(e));
    const auto& crossing = edges.at({uv.u, uv.v});
    result.edge_crossings[e] = crossing;
    if (crossing.size() == 1) {
      auto input = complex.find_edge(uv.u, uv.v);
      if (!input || cls.internal_edge[*input]) {
        throw InvariantError("collapsed complex keeps an internal edge");
      }
    } else {
      ++result.diagonal_edges;
      auto hull = complex.find_cube_at(uv.u, crossing);
      if (!hull || cls.cube_kind[*hull] == CubeKind::kInternal) {
        throw InvariantError("diagonal edge passes through the inside of a panel");
      }
    }
  }
  for (const Cube& q : complex.cubes()) {
    if (!cells.contains(q.vertex_set())) ++result.removed_cubes;
  }
  if (!panels.empty() && result.removed_cubes == 0) {
    throw InvariantError("collapse removed no cube");
  }
  result.hyperplane_map = hyperplane_provenance(complex, result);
  return result;
}

std::vector<std::vector<HyperplaneId>> hyperplane_provenance(const CubeComplex& input,
                                                             const CollapseResult& result) {
  const CubeComplex& out = result.output;
  std::vector<std::vector<HyperplaneId>> map(input.hyperplane_count());
  for (const Hyperplane& cls : out.hyperplanes()) {
    const auto& first = result.edge_crossings.at(cls.dual_edges.front());
    if (first.empty()) {
      throw InvariantError("output hyperplane " + std::to_string(cls.id) +
                           " has an empty crossing set");
    }
    for (EdgeId e : cls.dual_edges) {
      if (result.edge_crossings.at(e) != first) {
        throw InvariantError("output hyperplane " + std::to_string(cls.id) +
                             " has edges with different crossing sets");
      }
    }
    for (HyperplaneId k : first) {
      if (k < 0 || static_cast<std::size_t>(k) >= map.size()) {
        throw InvariantError("output hyperplane " + std::to_string(cls.id) +
                             " refers to an unknown input hyperplane");
      }
      map[k].push_back(cls.id);
    }
  }
  return map;
}

}  // namespace panelcollapse
