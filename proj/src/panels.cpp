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

#include "panelcollapse/panels.hpp"

#include <algorithm>
#include <set>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

bool have_common_vertex(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

void require_crossing(const CubeComplex& complex, const PanelKey& key) {
  const auto count = static_cast<HyperplaneId>(complex.hyperplane_count());
  if (key.abutting < 0 || key.abutting >= count || key.extremalising < 0 ||
      key.extremalising >= count) {
    throw PreconditionError("panel " + to_string(key) + " names an unknown hyperplane");
  }
  if (!crosses(complex, key.abutting, key.extremalising)) {
    throw PreconditionError("hyperplanes " + std::to_string(key.abutting) + " and " +
                            std::to_string(key.extremalising) + " do not cross");
  }
}

}  // namespace

std::string to_string(const PanelKey& key) {
  return std::to_string(key.abutting) + "," + std::to_string(key.extremalising) + "," +
         side_symbol(key.side);
}

PanelKey parse_panel_key(const std::string& text) {
  auto first = text.find(',');
  auto second = first == std::string::npos ? first : text.find(',', first + 1);
  if (second == std::string::npos || text.size() != second + 2) {
    throw ParseError(0, "panel must look like H,E,side (got '" + text + "')");
  }
  PanelKey key;
  try {
    std::size_t used = 0;
    key.abutting = std::stoi(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("H");
    std::string e = text.substr(first + 1, second - first - 1);
    key.extremalising = std::stoi(e, &used);
    if (used != e.size()) throw std::invalid_argument("E");
  } catch (const std::exception&) {
    throw ParseError(0, "panel must look like H,E,side (got '" + text + "')");
  }
  char s = text.back();
  if (s != '-' && s != '+') throw ParseError(0, "panel side must be '-' or '+'");
  key.side = s == '-' ? Side::kMinus : Side::kPlus;
  return key;
}

bool crosses(const CubeComplex& complex, HyperplaneId h, HyperplaneId e) {
  if (h == e) return false;
  std::vector<HyperplaneId> dirs{std::min(h, e), std::max(h, e)};
  for (const Cube& sq : complex.cubes(2)) {
    if (sq.directions == dirs) return true;
  }
  return false;
}

std::vector<std::pair<HyperplaneId, HyperplaneId>> crossing_pairs(const CubeComplex& complex) {
  std::set<std::pair<HyperplaneId, HyperplaneId>> pairs;
  for (const Cube& sq : complex.cubes(2)) pairs.insert({sq.directions[0], sq.directions[1]});
  return {pairs.begin(), pairs.end()};
}

HyperplaneComplex::HyperplaneComplex(const CubeComplex& complex, HyperplaneId h) : h_(h) {
  const Hyperplane& hp = complex.hyperplane(h);
  dual_edges_ = hp.dual_edges;
  adjacency_.resize(dual_edges_.size());
  for (std::size_t i = 0; i < dual_edges_.size(); ++i) {
    const Edge& e = complex.edge(dual_edges_[i]);
    for (VertexId across_u : complex.neighbors(e.u)) {
      if (across_u == e.v) continue;
      HyperplaneId k = complex.edge_hyperplane(*complex.find_edge(e.u, across_u));
      auto across_v = complex.flip(e.v, k);
      if (!across_v || !complex.find_edge(across_u, *across_v)) continue;
      EdgeId other = *complex.find_edge(across_u, *across_v);
      auto it = std::lower_bound(dual_edges_.begin(), dual_edges_.end(), other);
      adjacency_[i].push_back({static_cast<std::size_t>(it - dual_edges_.begin()), k});
    }
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
  }
}

std::vector<std::size_t> HyperplaneComplex::carrier_of(HyperplaneId e) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (auto [j, label] : adjacency_[i]) {
      if (label == e) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool is_extremal(const CubeComplex& complex, const PanelKey& key) {
  require_crossing(complex, key);
  HyperplaneComplex hc(complex, key.abutting);
  std::vector<bool> in_carrier(hc.vertex_count(), false);
  for (std::size_t i : hc.carrier_of(key.extremalising)) in_carrier[i] = true;
  // The halfspace of H cut out by E must lie inside the carrier of H ∩ E.
  for (std::size_t i = 0; i < hc.vertex_count(); ++i) {
    const Edge& e = complex.edge(hc.dual_edge(i));
    if (complex.side(e.u, key.extremalising) == key.side && !in_carrier[i]) return false;
  }
  return true;
}

Panel make_panel(const CubeComplex& complex, const PanelKey& key) {
  if (!is_extremal(complex, key)) {
    throw PreconditionError("panel " + to_string(key) + " is not extremal");
  }
  Panel panel;
  panel.key = key;
  for (EdgeId id : complex.hyperplane(key.abutting).dual_edges) {
    const Edge& e = complex.edge(id);
    if (complex.side(e.u, key.extremalising) != key.side) continue;
    panel.internal_edges.push_back(id);
    panel.vertices.push_back(e.u);
    panel.vertices.push_back(e.v);
  }
  std::sort(panel.vertices.begin(), panel.vertices.end());
  panel.vertices.erase(std::unique(panel.vertices.begin(), panel.vertices.end()),
                       panel.vertices.end());
  return panel;
}

std::vector<Panel> extremal_panels(const CubeComplex& complex) {
  std::vector<PanelKey> keys;
  for (auto [a, b] : crossing_pairs(complex)) {
    for (auto [h, e] : {std::pair{a, b}, std::pair{b, a}}) {
      for (Side s : {Side::kMinus, Side::kPlus}) {
        PanelKey key{h, e, s};
        if (is_extremal(complex, key)) keys.push_back(key);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Panel> out;
  out.reserve(keys.size());
  for (const PanelKey& key : keys) out.push_back(make_panel(complex, key));
  return out;
}

std::optional<Panel> find_extremal_panel(const CubeComplex& complex) {
  auto pairs = crossing_pairs(complex);
  if (pairs.empty()) return std::nullopt;
  std::vector<PanelKey> keys;
  for (auto [a, b] : pairs) {
    for (auto [h, e] : {std::pair{a, b}, std::pair{b, a}}) {
      for (Side s : {Side::kMinus, Side::kPlus}) keys.push_back({h, e, s});
    }
  }
  std::sort(keys.begin(), keys.end());
  for (const PanelKey& key : keys) {
    if (is_extremal(complex, key)) return make_panel(complex, key);
  }
  throw InvariantError("hyperplanes cross but no panel is extremal");
}

bool no_facing_panels(const CubeComplex& complex, std::span<const Panel> panels) {
  std::set<std::vector<HyperplaneId>> spanned;
  for (int d = 2; d <= std::min(4, complex.dimension()); ++d) {
    for (const Cube& c : complex.cubes(d)) spanned.insert(c.directions);
  }
  for (std::size_t i = 0; i < panels.size(); ++i) {
    for (std::size_t j = i + 1; j < panels.size(); ++j) {
      const Panel& p = panels[i];
      const Panel& q = panels[j];
      if (p.key == q.key || have_common_vertex(p.vertices, q.vertices)) continue;
      std::vector<HyperplaneId> dirs{p.key.abutting, p.key.extremalising, q.key.abutting,
                                     q.key.extremalising};
      std::sort(dirs.begin(), dirs.end());
      dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
      if (spanned.contains(dirs)) return false;
    }
  }
  return true;
}

}  // namespace panelcollapse
