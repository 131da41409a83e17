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

#ifndef PANELCOLLAPSE_RANDOM_HPP_
#define PANELCOLLAPSE_RANDOM_HPP_

// Standard and random complexes, actions and wallspaces for tests and the
// fuzz command.

#include <cstdint>
#include <random>
#include <string>

#include "panelcollapse/complex.hpp"
#include "panelcollapse/pocset.hpp"
#include "panelcollapse/symmetry.hpp"

namespace panelcollapse {

using Rng = std::mt19937_64;

// Vertices are bit strings "010"; hypercube(0) is the single vertex "o".
CubeComplex hypercube(int dimension);
CubeComplex path_complex(int edges);  // vertices p0 .. pN
CubeComplex star_complex(int leaves);  // centre c, leaves l1 .. lN
// Vertices "a.b" for a in first, b in second.
CubeComplex product(const CubeComplex& first, const CubeComplex& second);
CubeComplex grid_complex(int rows, int columns);

CubeComplex random_tree(Rng& rng, int vertices);
// Intersection of cuts random halfspaces around a random vertex.
CubeComplex random_convex_subcomplex(const CubeComplex& complex, Rng& rng, int cuts);
// A convex subcomplex of a product of at most max_dimension random trees.
CubeComplex random_complex(Rng& rng, int max_dimension, int max_vertices);
Wallspace random_wallspace(Rng& rng, int points, int walls);

// A cyclic or two-generator group of automorphisms acting without
// inversions; the trivial group when none is found.
GroupAction random_inversion_free_action(const CubeComplex& complex, Rng& rng);

struct SymmetricInstance {
  CubeComplex complex;
  GroupAction action;
};
// tree^k with the cyclic shift of coordinates, which inverts nothing.
SymmetricInstance symmetric_power(const CubeComplex& tree, int k);

struct FuzzSummary {
  std::size_t complexes = 0;
  std::size_t steps = 0;
  std::size_t max_steps = 0;
  std::size_t nontrivial_actions = 0;
  std::size_t over_step_bound = 0;  // runs longer than the count of cubes of dim >= 2
  std::size_t failures = 0;
  std::string first_failure;
};

// Runs the collapse driver on count random instances.
FuzzSummary run_fuzz(std::uint64_t seed, int count);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_RANDOM_HPP_
