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

#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "panelcollapse/text_format.hpp"

namespace panelcollapse::testing {

std::string fixture_path(const std::string& name) {
  return std::string(PANELCOLLAPSE_FIXTURES) + "/" + name;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CubeComplex load_complex(const std::string& fixture) { return parse_complex(read_fixture(fixture)); }

CubeComplex square() {
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return CubeComplex::from_graph({"a", "b", "c", "d"}, edges);
}

std::string provenance_defect(const CubeComplex& input, const CollapseResult& result) {
  const CubeComplex& out = result.output;
  if (result.edge_crossings.size() != out.edge_count()) return "crossing list size mismatch";
  for (const Hyperplane& h : out.hyperplanes()) {
    const auto& first = result.edge_crossings[h.dual_edges.front()];
    if (first.empty()) return "output hyperplane " + std::to_string(h.id) + " crosses nothing";
    for (EdgeId e : h.dual_edges) {
      if (result.edge_crossings[e] != first) {
        return "output hyperplane " + std::to_string(h.id) + " has unequal crossing sets";
      }
    }
  }
  for (HyperplaneId h = 0; h < static_cast<HyperplaneId>(input.hyperplane_count()); ++h) {
    std::set<EdgeId> trace;
    std::set<HyperplaneId> classes;
    for (EdgeId e = 0; e < static_cast<EdgeId>(out.edge_count()); ++e) {
      const auto& cs = result.edge_crossings[e];
      if (std::binary_search(cs.begin(), cs.end(), h)) {
        trace.insert(e);
        classes.insert(out.edge_hyperplane(e));
      }
    }
    std::set<EdgeId> whole;
    for (HyperplaneId k : classes) {
      for (EdgeId e : out.hyperplane(k).dual_edges) whole.insert(e);
    }
    if (whole != trace) return "input hyperplane " + std::to_string(h) + " splits an output class";
    if (std::vector<HyperplaneId>(classes.begin(), classes.end()) != result.hyperplane_map[h]) {
      return "hyperplane map disagrees for input hyperplane " + std::to_string(h);
    }
  }
  return {};
}

std::vector<std::vector<Panel>> panel_sets(const CubeComplex& complex, Rng& rng, int limit) {
  const std::vector<Panel> all = extremal_panels(complex);
  std::vector<std::vector<Panel>> sets;
  for (const Panel& p : all) sets.push_back({p});
  std::set<std::vector<PanelKey>> seen;
  for (int attempt = 0; attempt < 8 * limit && static_cast<int>(sets.size()) < limit; ++attempt) {
    std::vector<Panel> chosen;
    for (const Panel& p : all) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) chosen.push_back(p);
    }
    if (chosen.size() < 2 || !no_facing_panels(complex, chosen)) continue;
    std::vector<PanelKey> keys;
    for (const Panel& p : chosen) keys.push_back(p.key);
    if (seen.insert(keys).second) sets.push_back(std::move(chosen));
  }
  return sets;
}

bool is_tree(const CubeComplex& complex) {
  return complex.dimension() <= 1 && complex.edge_count() + 1 == complex.vertex_count();
}

}  // namespace panelcollapse::testing
