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

#ifndef PANELCOLLAPSE_TEXT_FORMAT_HPP_
#define PANELCOLLAPSE_TEXT_FORMAT_HPP_

// Line-oriented file formats. Every format starts with a header line; '#'
// starts a comment and blank lines are ignored. Errors carry line numbers.
//
//   cubecomplex v1      action v1            wallspace v1
//   vertex a            gen a->b b->a        point p
//   edge a b                                 wall p,q | r,s
//                                            sym p->q q->p
//
//   provenance v1
//   edge a b crosses 0 1

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "panelcollapse/collapse.hpp"
#include "panelcollapse/complex.hpp"
#include "panelcollapse/pocset.hpp"
#include "panelcollapse/symmetry.hpp"

namespace panelcollapse {

struct GraphText {
  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Syntax only: rejects unknown or duplicate vertices and duplicate edges.
GraphText parse_graph(std::string_view text);
// Syntax plus validation; invalid complexes raise ValidationError.
CubeComplex parse_complex(std::string_view text);
// Vertex lines in id order, then edge lines in id order, so parsing the
// output reproduces every id.
std::string serialize_complex(const CubeComplex& complex, std::string_view comment = {});

GroupAction parse_action(std::string_view text, const CubeComplex& complex);
std::string serialize_action(const CubeComplex& complex, const GroupAction& action);

Wallspace parse_wallspace(std::string_view text);

// One line per output edge with the input hyperplanes it crosses.
std::string serialize_provenance(const CollapseResult& result);
// Crossing sets by edge id of complex.
std::vector<std::vector<HyperplaneId>> parse_provenance(std::string_view text,
                                                         const CubeComplex& complex);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_TEXT_FORMAT_HPP_
