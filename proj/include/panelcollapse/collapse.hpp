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

#ifndef PANELCOLLAPSE_COLLAPSE_HPP_
#define PANELCOLLAPSE_COLLAPSE_HPP_

// Panel collapse: every maximal cube is replaced by its fundament and the
// pieces are glued into a new complex on the same vertex set.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "panelcollapse/complex.hpp"
#include "panelcollapse/local_cube.hpp"
#include "panelcollapse/panels.hpp"

namespace panelcollapse {

enum class CubeKind { kInternal, kExternal, kCompletelyExternal };

const char* to_string(CubeKind kind);

struct CubeClassification {
  std::vector<bool> internal_edge;     // by input edge id
  std::vector<int> edge_witness;       // panel index, -1 for external edges
  std::vector<CubeKind> cube_kind;     // by input cube id
  std::vector<int> cube_witness;       // panel index for internal cubes, else -1
};

// Throws PreconditionError unless every panel is extremal and the set has
// the no facing panels property.
void check_panel_set(const CubeComplex& complex, std::span<const Panel> panels);

CubeClassification classify(const CubeComplex& complex, std::span<const Panel> panels);

// Traces of the panels on one cube, in the cube's local directions.
LocalCube local_cube(const CubeComplex& complex, std::span<const Panel> panels, CubeId cube);

struct PersistentSubcube {
  CubeId persistent = -1;
  CubeId salient = -1;
  std::vector<HyperplaneId> separators;  // ascending
  int kappa = 0;
};

// Throws PreconditionError for an internal cube.
PersistentSubcube persistent_subcube(const CubeComplex& complex, std::span<const Panel> panels,
                                     CubeId cube);

// A piece of a fundament in input vertex ids. Ordinary cells have cube set
// and no separators; a diagonal joins cube to opposite across separators.
struct FundamentCell {
  std::vector<VertexId> vertices;  // ascending
  CubeId cube = -1;
  CubeId opposite = -1;
  std::vector<HyperplaneId> separators;

  bool is_diagonal() const { return !separators.empty(); }
};

struct Fundament {
  CubeId cube = -1;
  CubeKind kind = CubeKind::kCompletelyExternal;
  bool d_connected = true;
  std::optional<PersistentSubcube> persistent;  // external cubes only
  std::vector<FundamentCell> cells;            // sorted by vertex set
};

Fundament fundament(const CubeComplex& complex, std::span<const Panel> panels, CubeId cube);

struct CollapseResult {
  CubeComplex output;
  std::vector<PanelKey> panels;
  // Input hyperplanes crossed by each output edge, by output edge id.
  std::vector<std::vector<HyperplaneId>> edge_crossings;
  // Output hyperplane classes meeting each input hyperplane.
  std::vector<std::vector<HyperplaneId>> hyperplane_map;
  std::size_t removed_cubes = 0;  // input cubes that are not output cubes
  std::size_t diagonal_edges = 0;
};

// Throws PreconditionError for a bad panel set and InvariantError when a
// guaranteed property of the output fails.
CollapseResult collapse(const CubeComplex& complex, std::span<const Panel> panels);

// Recomputes and checks the hyperplane correspondence of a collapse.
// Throws InvariantError naming the first inconsistent output class.
std::vector<std::vector<HyperplaneId>> hyperplane_provenance(const CubeComplex& input,
                                                             const CollapseResult& result);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_COLLAPSE_HPP_
