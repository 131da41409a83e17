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

#ifndef PANELCOLLAPSE_DOT_HPP_
#define PANELCOLLAPSE_DOT_HPP_

#include <string>
#include <vector>

#include "panelcollapse/complex.hpp"

namespace panelcollapse {

// Graphviz text with one node per vertex and one edge per edge, coloured by
// hyperplane. With crossings (by edge id), edges crossing several input
// hyperplanes are dashed and labelled with the whole set.
std::string export_dot(const CubeComplex& complex,
                       const std::vector<std::vector<HyperplaneId>>* crossings = nullptr);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_DOT_HPP_
