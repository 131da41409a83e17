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

#ifndef PANELCOLLAPSE_SYMMETRY_HPP_
#define PANELCOLLAPSE_SYMMETRY_HPP_

// Finite group actions on cube complexes, complexity vectors and the
// equivariant collapse driver.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "panelcollapse/collapse.hpp"
#include "panelcollapse/complex.hpp"
#include "panelcollapse/panels.hpp"

namespace panelcollapse {

// image[v] is the image of vertex v.
struct Automorphism {
  std::vector<VertexId> image;

  static Automorphism identity(std::size_t n);
  bool is_identity() const;
  // (a * b)(v) = a(b(v)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

class GroupAction {
 public:
  static constexpr std::size_t kDefaultLimit = 10000;

  // Closes the generators under composition. Throws StructuralError when a
  // generator is not a bijection or breaks an edge, PreconditionError when
  // the group outgrows limit.
  static GroupAction generate(const CubeComplex& complex, std::vector<Automorphism> generators,
                              std::size_t limit = kDefaultLimit);
  static GroupAction trivial(const CubeComplex& complex);

  std::span<const Automorphism> generators() const { return generators_; }
  // Identity first, then in discovery order.
  std::span<const Automorphism> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::vector<Automorphism> generators_;
  std::vector<Automorphism> elements_;
};

HyperplaneId image_of_hyperplane(const CubeComplex& complex, const Automorphism& g,
                                 HyperplaneId h);
CubeId image_of_cube(const CubeComplex& complex, const Automorphism& g, CubeId c);
PanelKey image_of_panel(const CubeComplex& complex, const Automorphism& g, const Panel& panel);

struct Inversion {
  std::size_t element = 0;  // index into elements()
  HyperplaneId hyperplane = 0;
};

struct ActionReport {
  bool edge_preserving = true;
  std::size_t order = 1;
  std::vector<bool> inverted;  // by hyperplane
  std::vector<Inversion> inversions;
  bool inversion_free() const { return inversions.empty(); }
};

// Throws StructuralError naming an edge some element fails to preserve.
ActionReport check_action(const CubeComplex& complex, const GroupAction& action);

// Distinct panels in the orbit of panel, one per (abutting, vertex set).
std::vector<Panel> panel_orbit(const CubeComplex& complex, const GroupAction& action,
                               const Panel& panel);

// counts[d] = number of orbits of d-cubes; only d >= 2 take part.
struct ComplexityVector {
  std::vector<std::size_t> counts;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
  bool is_zero() const;
  // Entries from dimension top (default: own dimension) down to 2, e.g.
  // "(1,6)"; dimensions above the complex count as 0.
  std::vector<std::size_t> entries(int top = -1) const;
  std::string to_string(int top = -1) const;
  // Lexicographic from the top dimension, missing dimensions counting as 0.
  friend std::strong_ordering operator<=>(const ComplexityVector& a, const ComplexityVector& b);
  friend bool operator==(const ComplexityVector& a, const ComplexityVector& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

ComplexityVector complexity(const CubeComplex& complex, const GroupAction& action);

struct Subdivision {
  CubeComplex complex;
  std::vector<CubeId> cube_of_vertex;  // new vertex -> input cube
};

// Vertices are the input cubes, joined along codimension-1 faces. A cube
// with vertices a, b, ... is named "(a|b|...)"; 0-cubes keep their names.
Subdivision subdivide(const CubeComplex& complex);
GroupAction push_forward(const CubeComplex& complex, const Subdivision& sub,
                         const GroupAction& action);

// FNV-1a over the output edges and their crossing sets.
std::uint64_t provenance_digest(const CollapseResult& result);

struct CollapseStep {
  CollapseResult result;
  GroupAction action;
  PanelKey chosen;
  std::size_t orbit_size = 0;
  ComplexityVector before;
  ComplexityVector after;
};

// Collapses the orbit of the first extremal panel. Returns nothing when no
// panel exists. Throws PreconditionError for an action with inversions.
std::optional<CollapseStep> equivariant_collapse_step(const CubeComplex& complex,
                                                      const GroupAction& action);

struct RunResult {
  std::vector<CollapseStep> steps;
  CubeComplex final_complex;
  GroupAction final_action;
};

// Iterates collapse steps until the complex is a tree.
RunResult run_to_tree(const CubeComplex& complex, const GroupAction& action);

// Edge-preserving vertex permutations, found by backtracking in breadth-first
// order from vertex 0. Stops after limit automorphisms.
std::vector<Automorphism> automorphisms(const CubeComplex& complex, std::size_t limit);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_SYMMETRY_HPP_
