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

#include "panelcollapse/dot.hpp"

#include <array>
#include <sstream>

namespace panelcollapse {
namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const CubeComplex& complex,
                       const std::vector<std::vector<HyperplaneId>>* crossings) {
  std::ostringstream out;
  out << "graph complex {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (const std::string& name : complex.names()) out << "  " << quoted(name) << ";\n";
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    const Edge& uv = complex.edge(static_cast<EdgeId>(e));
    const HyperplaneId h = complex.edge_hyperplane(static_cast<EdgeId>(e));
    out << "  " << quoted(complex.name(uv.u)) << " -- " << quoted(complex.name(uv.v)) << " [color=\""
        << kPalette[h % kPalette.size()] << "\", label=\"";
    if (crossings) {
      const auto& set = (*crossings)[e];
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
      out << "\"";
      if (set.size() > 1) out << ", style=dashed";
    } else {
      out << h << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace panelcollapse
