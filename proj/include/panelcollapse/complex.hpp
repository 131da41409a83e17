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

#ifndef PANELCOLLAPSE_COMPLEX_HPP_
#define PANELCOLLAPSE_COMPLEX_HPP_

// Finite CAT(0) cube complexes, stored as median graphs.
//
// A CubeComplex is built from a vertex list and an edge list and is validated
// on construction: the graph must be connected, simple and median. Cubes are
// always the canonical filling (every induced hypercube subgraph is a cube) and
// hyperplanes are the classes of the "opposite sides of a square" relation.
//
// Each vertex carries halfspace coordinates: for hyperplane h, side(v, h) is
// kMinus when v lies in the halfspace containing vertex 0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace panelcollapse {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using HyperplaneId = std::int32_t;
using CubeId = std::int32_t;

enum class Side : std::uint8_t { kMinus = 0, kPlus = 1 };

inline Side opposite(Side s) {
  return s == Side::kMinus ? Side::kPlus : Side::kMinus;
}
inline char side_symbol(Side s) { return s == Side::kMinus ? '-' : '+'; }

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A cube of the complex. corners[m] is the vertex reached from corners[0] by
// crossing directions[i] for every bit i set in m; corners[0] lies on the
// minus side of every direction.
struct Cube {
  std::vector<HyperplaneId> directions;  // ascending
  std::vector<VertexId> corners;

  int dimension() const { return static_cast<int>(directions.size()); }
  VertexId base() const { return corners.front(); }
  bool spans(HyperplaneId h) const;
  // Sorted copy of the vertex set.
  std::vector<VertexId> vertex_set() const;
};

struct Hyperplane {
  HyperplaneId id = 0;
  std::vector<EdgeId> dual_edges;   // ascending
  std::vector<VertexId> minus_side;  // halfspace containing vertex 0
  std::vector<VertexId> plus_side;
};

struct MedianViolation {
  VertexId a = 0, b = 0, c = 0;
  std::size_t median_count = 0;  // 0 or >= 2
};

struct ValidationReport {
  bool connected = false;
  bool simple = false;
  bool median = false;
  bool flag_filled = false;
  std::optional<MedianViolation> violation;
  std::vector<std::size_t> cube_counts;  // index = dimension; empty unless median
  std::optional<long long> euler;
  std::string message;  // first failure, empty when valid

  bool valid() const {
    return connected && simple && median && flag_filled && euler == 1;
  }
};

// Checks the graph without building a complex. Self-loops, duplicate edges,
// duplicate names and dangling vertex references raise StructuralError; every
// other defect is reported.
ValidationReport validate_graph(std::span<const std::string> names,
                                std::span<const std::pair<VertexId, VertexId>> edges);

class CubeComplex {
 public:
  // Throws StructuralError or ValidationError.
  static CubeComplex from_graph(std::vector<std::string> names,
                                std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t hyperplane_count() const { return hyperplanes_.size(); }
  int dimension() const { return static_cast<int>(cube_offsets_.size()) - 2; }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  HyperplaneId edge_hyperplane(EdgeId e) const { return edge_hyperplane_[e]; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }

  std::span<const Hyperplane> hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(HyperplaneId h) const { return hyperplanes_[h]; }

  Side side(VertexId v, HyperplaneId h) const;
  // The neighbour of v across h, if the edge exists.
  std::optional<VertexId> flip(VertexId v, HyperplaneId h) const;

  // All cubes, ordered by dimension.
  std::span<const Cube> cubes() const { return cubes_; }
  std::span<const Cube> cubes(int dimension) const;
  const Cube& cube(CubeId id) const { return cubes_[id]; }
  CubeId first_cube_of_dimension(int dimension) const;
  std::size_t cube_count(int dimension) const;
  std::optional<CubeId> find_cube(VertexId base, std::span<const HyperplaneId> directions) const;
  // Looks a cube up by an arbitrary corner and direction set.
  std::optional<CubeId> find_cube_at(VertexId corner, std::span<const HyperplaneId> directions) const;
  bool is_maximal(CubeId id) const { return maximal_[id]; }
  std::vector<CubeId> maximal_cubes() const;
  // Cubes spanning h (the carrier of h, as cubes that meet it).
  std::vector<CubeId> carrier(HyperplaneId h) const;

  const ValidationReport& report() const { return report_; }
  long long euler_characteristic() const { return *report_.euler; }
  bool is_tree() const { return dimension() <= 1; }

  int distance(VertexId a, VertexId b) const;
  std::vector<HyperplaneId> crossing_set(VertexId a, VertexId b) const;
  std::vector<VertexId> convex_hull(std::span<const VertexId> vertices) const;
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

 private:
  CubeComplex() = default;
  friend ValidationReport validate_graph(std::span<const std::string>,
                                         std::span<const std::pair<VertexId, VertexId>>);
  // Fills *out when the graph is valid.
  static ValidationReport analyze(std::vector<std::string> names,
                                  std::span<const std::pair<VertexId, VertexId>> edges,
                                  CubeComplex* out);
  void build_hyperplanes();
  void build_cubes();

  std::vector<std::string> names_;
  std::map<std::string, VertexId> name_index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<HyperplaneId> edge_hyperplane_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<std::uint64_t>> coords_;  // bit h set <=> kPlus
  std::vector<std::vector<std::pair<HyperplaneId, VertexId>>> flips_;
  std::vector<Cube> cubes_;
  std::vector<CubeId> cube_offsets_;  // cube_offsets_[d] = first cube of dim d
  std::map<std::pair<VertexId, std::vector<HyperplaneId>>, CubeId> cube_index_;
  std::vector<bool> maximal_;
  ValidationReport report_;
};

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_COMPLEX_HPP_
