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

#ifndef PANELCOLLAPSE_LOCAL_CUBE_HPP_
#define PANELCOLLAPSE_LOCAL_CUBE_HPP_

// Fundaments of a single cube, computed in the cube's own coordinates.
//
// Vertices of a d-cube are d-bit masks. A face is a set of free directions
// plus the fixed bits of every other direction. Panels are seen only through
// their traces on the cube.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace panelcollapse {

using Mask = std::uint32_t;

struct Face {
  Mask free = 0;
  Mask base = 0;  // base & free == 0

  int dimension() const;
  bool contains(Mask vertex) const { return (vertex & ~free) == base; }
  bool contains(const Face& other) const {
    return (other.free & ~free) == 0 && (other.base & ~free) == base;
  }
  bool meets(const Face& other) const {
    return ((base ^ other.base) & ~free & ~other.free) == 0;
  }
  std::vector<Mask> vertices() const;
  friend auto operator<=>(const Face&, const Face&) = default;
};

// Smallest face containing every vertex. vertices must be nonempty.
Face hull_of(const std::vector<Mask>& vertices);

// An ordinary face (separators == 0) or a diagonal cube joining face to its
// parallel copy across every direction in separators. Diagonals across a
// single direction are stored as the ordinary face they span.
struct Cell {
  Face face;
  Mask separators = 0;

  static Cell ordinary(const Face& f) { return {f, 0}; }
  static Cell diagonal(const Face& w, Mask separators);

  bool is_diagonal() const { return separators != 0; }
  int dimension() const { return face.dimension() + (separators ? 1 : 0); }
  Face hull() const { return {face.free | separators, face.base & ~separators}; }
  std::vector<Mask> vertices() const;  // sorted
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Trace of a panel on the cube: internal edges run along abutting. With
// extremalising >= 0 they are the edges whose extremalising bit equals side;
// with extremalising < 0 every edge along abutting is internal.
struct LocalPanel {
  int abutting = 0;
  int extremalising = -1;
  int side = 0;
  friend auto operator<=>(const LocalPanel&, const LocalPanel&) = default;
};

struct LocalFundament {
  Face face;
  bool internal = false;
  bool completely_external = false;
  bool d_connected = false;
  // Set for external faces.
  std::optional<Face> persistent;
  std::optional<Face> salient;
  Mask separators = 0;
  int kappa = 0;
  std::vector<Cell> cells;  // sorted, closed under faces
  // Set for external faces that are not completely external.
  std::vector<Cell> f0;
  std::vector<Cell> f1;
};

class LocalCube {
 public:
  static constexpr int kMaxDimension = 12;

  // Throws PreconditionError for bad traces or dimension above the limit.
  LocalCube(int dimension, std::vector<LocalPanel> panels);

  int dimension() const { return dimension_; }
  Face top() const { return {(Mask{1} << dimension_) - 1, 0}; }
  const std::vector<LocalPanel>& panels() const { return panels_; }

  // Edge at vertex (bit dir clear) along dir.
  bool edge_internal(Mask vertex, int dir) const;
  // Interior inside the inside of some panel.
  bool internal(const Face& f) const;
  bool completely_external(const Face& f) const;
  // Vertices all of whose edges in f are external.
  std::vector<Mask> persistent_corners(const Face& f) const;
  // Whether the completely external part of f is connected.
  bool d_connected(const Face& f) const;

  // Memoized. Verifies the structural invariants along the way and throws
  // InvariantError on any breach.
  const LocalFundament& fundament(const Face& f);

  // Every proper face of f, plus f.
  std::vector<Face> subfaces(const Face& f) const;

 private:
  LocalFundament compute(const Face& f);
  void verify(const LocalFundament& fund);

  int dimension_;
  std::vector<LocalPanel> panels_;
  std::vector<bool> internal_edges_;  // index vertex * dimension + dir
  std::map<Face, LocalFundament> memo_;
  std::map<Face, bool> connected_memo_;
};

// Cells whose hull lies in f.
std::vector<Cell> restrict_cells(const std::vector<Cell>& cells, const Face& f);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_LOCAL_CUBE_HPP_
