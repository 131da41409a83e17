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

#ifndef PANELCOLLAPSE_PANELS_HPP_
#define PANELCOLLAPSE_PANELS_HPP_

// Blocks and panels of a CAT(0) cube complex.
//
// A panel is named by a triple (H, E, side): H is the abutting hyperplane, E
// the extremalising hyperplane, and side picks the halfspace of E containing
// the panel. Its internal edges are the edges dual to H on that side of E.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "panelcollapse/complex.hpp"

namespace panelcollapse {

struct PanelKey {
  HyperplaneId abutting = 0;
  HyperplaneId extremalising = 0;
  Side side = Side::kMinus;
  friend auto operator<=>(const PanelKey&, const PanelKey&) = default;
};

std::string to_string(const PanelKey& key);  // "H,E,side", e.g. "0,1,-"
// Parses "H,E,side" with side one of '-', '+'. Throws ParseError(0, ...).
PanelKey parse_panel_key(const std::string& text);

struct Panel {
  PanelKey key;
  std::vector<VertexId> vertices;     // ascending
  std::vector<EdgeId> internal_edges;  // ascending
};

bool crosses(const CubeComplex& complex, HyperplaneId h, HyperplaneId e);

// Unordered crossing pairs (H, E) with H < E, ascending.
std::vector<std::pair<HyperplaneId, HyperplaneId>> crossing_pairs(const CubeComplex& complex);

// The hyperplane H viewed as a cube complex: one vertex per dual edge, one
// edge per square of the carrier, labelled by the square's other hyperplane.
class HyperplaneComplex {
 public:
  HyperplaneComplex(const CubeComplex& complex, HyperplaneId h);

  HyperplaneId hyperplane() const { return h_; }
  std::size_t vertex_count() const { return dual_edges_.size(); }
  EdgeId dual_edge(std::size_t i) const { return dual_edges_[i]; }
  // (neighbour index, label) pairs.
  std::span<const std::pair<std::size_t, HyperplaneId>> neighbors(std::size_t i) const {
    return adjacency_[i];
  }
  // Dual edges of h lying in a square crossed by e.
  std::vector<std::size_t> carrier_of(HyperplaneId e) const;

 private:
  HyperplaneId h_;
  std::vector<EdgeId> dual_edges_;
  std::vector<std::vector<std::pair<std::size_t, HyperplaneId>>> adjacency_;
};

// Throws PreconditionError unless H and E are distinct crossing hyperplanes.
bool is_extremal(const CubeComplex& complex, const PanelKey& key);

// Builds the panel of an extremal triple. Throws PreconditionError otherwise.
Panel make_panel(const CubeComplex& complex, const PanelKey& key);

// All extremal panels in canonical order (H, then E, then '-' before '+').
std::vector<Panel> extremal_panels(const CubeComplex& complex);
std::optional<Panel> find_extremal_panel(const CubeComplex& complex);

// True unless two distinct panels are disjoint and some cube spans the
// abutting and extremalising hyperplanes of both.
bool no_facing_panels(const CubeComplex& complex, std::span<const Panel> panels);

}  // namespace panelcollapse

#endif  // PANELCOLLAPSE_PANELS_HPP_
