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

#ifndef PANELCOLLAPSE_POCSET_HPP_
#define PANELCOLLAPSE_POCSET_HPP_

// Finite wallspaces and their dual cube complexes.
//
// A vertex of the dual complex is an orientation: one chosen side per wall,
// with the chosen sides pairwise intersecting. Vertices are the orientations
// reachable from the principal orientation of the first point by flipping one
// wall at a time.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "panelcollapse/complex.hpp"
#include "panelcollapse/symmetry.hpp"

namespace panelcollapse {

struct Wall {
  std::vector<int> first;   // ascending point indices; lexicographically smaller side
  std::vector<int> second;  // ascending point indices
  friend auto operator<=>(const Wall&, const Wall&) = default;
};

// A point permutation: image[p] is the image of point p.
using PointPermutation = std::vector<int>;

class Wallspace {
 public:
  static constexpr std::size_t kMaxWalls = 64;

  // Throws StructuralError for empty sides, sides that do not partition the
  // points, duplicate walls, bad permutations, or too many walls.
  Wallspace(std::vector<std::string> points, std::vector<std::pair<std::vector<int>, std::vector<int>>> walls,
            std::vector<PointPermutation> symmetries = {});

  std::size_t point_count() const { return points_.size(); }
  const std::string& point(int p) const { return points_[p]; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Wall>& walls() const { return walls_; }
  const std::vector<PointPermutation>& symmetries() const { return symmetries_; }

  // Index of the wall a permutation sends wall w to. Throws PreconditionError
  // when the image is not a wall.
  std::size_t wall_image(const PointPermutation& g, std::size_t w) const;
  // Whether p lies on the second side of wall w.
  bool on_second_side(int p, std::size_t w) const;

 private:
  std::vector<std::string> points_;
  std::vector<Wall> walls_;
  std::vector<PointPermutation> symmetries_;
};

struct DualComplex {
  CubeComplex complex;
  // Bit w set: the orientation picks the second side of wall w.
  std::vector<std::uint64_t> orientation;  // by vertex
  std::vector<VertexId> point_vertex;      // principal orientation of each point
  std::vector<int> wall_of_hyperplane;     // by output hyperplane
  std::vector<bool> wall_realized;         // by wall
};

DualComplex dualize(const Wallspace& space);

// The automorphism of the dual complex induced by a point permutation.
Automorphism induced_automorphism(const Wallspace& space, const DualComplex& dual,
                                  const PointPermutation& g);

struct StallingsResult {
  DualComplex dual;
  std::size_t group_order = 1;     // closure of the point symmetries
  bool subdivided = false;
  RunResult run;
  std::vector<std::size_t> edge_stabilizers;  // by final tree edge
  std::vector<std::size_t> wall_stabilizers;  // by wall
  int dimension = 0;                          // of the dual complex
};

// Dualizes, pushes the symmetries to the complex, subdivides when they
// invert a hyperplane, and collapses to a tree. Throws InvariantError when
// an edge stabiliser does not divide |Stab(W)| * 2^dim for any wall W.
StallingsResult stallings_pipeline(const Wallspace& space);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_POCSET_HPP_
