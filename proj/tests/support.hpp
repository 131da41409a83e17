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

#ifndef PANELCOLLAPSE_TESTS_SUPPORT_HPP_
#define PANELCOLLAPSE_TESTS_SUPPORT_HPP_

// Helpers shared by the test binaries.

#include <string>
#include <vector>

#include "panelcollapse/collapse.hpp"
#include "panelcollapse/complex.hpp"
#include "panelcollapse/panels.hpp"
#include "panelcollapse/random.hpp"

namespace panelcollapse::testing {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

CubeComplex load_complex(const std::string& fixture);

// The square a-b-d-c with hyperplanes 0 (a|c side) and 1.
CubeComplex square();

// Empty when the output hyperplane classes satisfy the provenance
// invariants: equal, nonempty crossing sets within a class, and every input
// hyperplane's trace a union of whole classes. Otherwise a description.
std::string provenance_defect(const CubeComplex& input, const CollapseResult& result);

// Random subsets of the extremal panels passing no_facing_panels, at most
// limit of them, always including every single panel.
std::vector<std::vector<Panel>> panel_sets(const CubeComplex& complex, Rng& rng, int limit);

// Edges of a tree-shaped complex have no crossing hyperplanes.
bool is_tree(const CubeComplex& complex);

}  // namespace panelcollapse::testing

#endif  // PANELCOLLAPSE_TESTS_SUPPORT_HPP_
