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

#include "panelcollapse/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "panelcollapse/panels.hpp"

namespace panelcollapse {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string join(const std::vector<HyperplaneId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out;
}

std::vector<std::size_t> cube_counts(const CubeComplex& complex) {
  std::vector<std::size_t> counts;
  for (int d = 0; d <= complex.dimension(); ++d) counts.push_back(complex.cube_count(d));
  return counts;
}

std::string counts_text(const std::vector<std::size_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) out += (i ? "," : "") + std::to_string(counts[i]);
  return out;
}

json panel_json(const PanelKey& key) {
  return {{"abutting", key.abutting},
          {"extremalising", key.extremalising},
          {"side", std::string(1, side_symbol(key.side))}};
}

}  // namespace

std::string validation_summary(const ValidationReport& report) {
  if (!report.valid()) return "invalid; " + report.message;
  static const char* const kLabels[] = {"V", "E", "F", "C"};
  std::string out = "valid;";
  const auto& counts = report.cube_counts;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    out += ' ';
    out += d < 4 ? kLabels[d] : "Q" + std::to_string(d);
    out += '=' + std::to_string(counts[d]);
  }
  // Always show the four low dimensions, padding with zero.
  for (std::size_t d = counts.size(); d < 4; ++d) out += std::string(" ") + kLabels[d] + "=0";
  return out + "; Euler=" + std::to_string(*report.euler);
}

std::string validation_report(const GraphText& graph, bool json_output) {
  ValidationReport report = validate_graph(graph.names, graph.edges);
  if (!json_output) return validation_summary(report) + "\n";
  json j{{"valid", report.valid()},
         {"connected", report.connected},
         {"simple", report.simple},
         {"median", report.median},
         {"flag", report.flag_filled},
         {"vertices", graph.names.size()},
         {"edges", graph.edges.size()},
         {"cube_counts", report.cube_counts}};
  j["euler"] = report.euler ? json(*report.euler) : json(nullptr);
  if (report.violation) {
    const auto& v = *report.violation;
    j["violation"] = {{"vertices", {graph.names[v.a], graph.names[v.b], graph.names[v.c]}},
                      {"medians", v.median_count}};
  }
  j["message"] = report.message;
  return dump(j);
}

std::string hyperplanes_report(const CubeComplex& complex, bool json_output) {
  const auto pairs = crossing_pairs(complex);
  std::vector<std::vector<HyperplaneId>> crossing(complex.hyperplane_count());
  for (const auto& [a, b] : pairs) {
    crossing[a].push_back(b);
    crossing[b].push_back(a);
  }
  for (auto& c : crossing) std::sort(c.begin(), c.end());
  json rows = json::array();
  std::ostringstream out;
  for (const Hyperplane& h : complex.hyperplanes()) {
    const std::size_t carrier = complex.carrier(h.id).size();
    if (json_output) {
      rows.push_back({{"id", h.id},
                      {"dual_edges", h.dual_edges.size()},
                      {"minus", h.minus_side.size()},
                      {"plus", h.plus_side.size()},
                      {"carrier_cubes", carrier},
                      {"crosses", crossing[h.id]}});
    } else {
      out << "h" << h.id << " edges=" << h.dual_edges.size() << " minus=" << h.minus_side.size()
          << " plus=" << h.plus_side.size() << " carrier=" << carrier
          << " crosses=" << (crossing[h.id].empty() ? "-" : join(crossing[h.id])) << "\n";
    }
  }
  return json_output ? dump(rows) : out.str();
}

std::string panels_report(const CubeComplex& complex, bool json_output) {
  const std::vector<Panel> panels = extremal_panels(complex);
  if (json_output) {
    json rows = json::array();
    for (const Panel& p : panels) {
      json row = panel_json(p.key);
      row["internal_edges"] = p.internal_edges.size();
      row["vertices"] = p.vertices.size();
      rows.push_back(row);
    }
    return dump(rows);
  }
  std::ostringstream out;
  out << "# H E side internal\n";
  for (const Panel& p : panels) {
    out << p.key.abutting << ' ' << p.key.extremalising << ' ' << side_symbol(p.key.side) << ' '
        << p.internal_edges.size() << "\n";
  }
  return out.str();
}

std::string stats_report(const CubeComplex& complex, const GroupAction& action, bool json_output) {
  const auto counts = cube_counts(complex);
  const std::size_t pairs = crossing_pairs(complex).size();
  const std::size_t maximal = complex.maximal_cubes().size();
  const std::size_t panels = extremal_panels(complex).size();
  const ActionReport ar = check_action(complex, action);
  const ComplexityVector cv = complex.dimension() >= 2 ? complexity(complex, action) : ComplexityVector{};
  if (json_output) {
    return dump({{"vertices", complex.vertex_count()},
                 {"edges", complex.edge_count()},
                 {"dimension", complex.dimension()},
                 {"cube_counts", counts},
                 {"hyperplanes", complex.hyperplane_count()},
                 {"crossing_pairs", pairs},
                 {"maximal_cubes", maximal},
                 {"extremal_panels", panels},
                 {"euler", complex.euler_characteristic()},
                 {"tree", complex.is_tree()},
                 {"group_order", action.order()},
                 {"inversion_free", ar.inversion_free()},
                 {"complexity", cv.entries()}});
  }
  std::ostringstream out;
  out << "vertices " << complex.vertex_count() << "\n"
      << "edges " << complex.edge_count() << "\n"
      << "dimension " << complex.dimension() << "\n"
      << "cubes " << counts_text(counts) << "\n"
      << "hyperplanes " << complex.hyperplane_count() << "\n"
      << "crossing_pairs " << pairs << "\n"
      << "maximal_cubes " << maximal << "\n"
      << "extremal_panels " << panels << "\n"
      << "euler " << complex.euler_characteristic() << "\n"
      << "tree " << (complex.is_tree() ? "yes" : "no") << "\n"
      << "group_order " << action.order() << "\n"
      << "inversion_free " << (ar.inversion_free() ? "yes" : "no") << "\n"
      << "complexity " << cv.to_string() << "\n";
  return out.str();
}

std::string collapse_report(const CollapseResult& result, bool json_output) {
  const CubeComplex& out = result.output;
  if (json_output) {
    json panels = json::array();
    for (const PanelKey& k : result.panels) panels.push_back(panel_json(k));
    return dump({{"panels", panels},
                 {"vertices", out.vertex_count()},
                 {"edges", out.edge_count()},
                 {"cube_counts", cube_counts(out)},
                 {"removed_cubes", result.removed_cubes},
                 {"diagonal_edges", result.diagonal_edges},
                 {"hyperplane_map", result.hyperplane_map},
                 {"digest", hex64(provenance_digest(result))}});
  }
  std::ostringstream s;
  s << "panels";
  for (const PanelKey& k : result.panels) s << ' ' << to_string(k);
  s << "\n"
    << "output V=" << out.vertex_count() << " E=" << out.edge_count() << " cubes "
    << counts_text(cube_counts(out)) << "\n"
    << "removed_cubes " << result.removed_cubes << "\n"
    << "diagonal_edges " << result.diagonal_edges << "\n";
  for (std::size_t h = 0; h < result.hyperplane_map.size(); ++h) {
    s << "h" << h << " -> " << join(result.hyperplane_map[h]) << "\n";
  }
  s << "digest " << hex64(provenance_digest(result)) << "\n";
  return s.str();
}

std::string trace_report(const CubeComplex& input, const RunResult& run, bool json_output) {
  const int top = input.dimension();
  const CubeComplex& tree = run.final_complex;
  if (json_output) {
    json steps = json::array();
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
      const CollapseStep& step = run.steps[i];
      steps.push_back({{"step", i + 1},
                       {"panel", panel_json(step.chosen)},
                       {"orbit", step.orbit_size},
                       {"before", step.before.entries(top)},
                       {"after", step.after.entries(top)},
                       {"cube_counts", cube_counts(step.result.output)},
                       {"digest", hex64(provenance_digest(step.result))}});
    }
    return dump({{"input_dimension", top},
                 {"group_order", run.final_action.order()},
                 {"steps", steps},
                 {"tree", {{"vertices", tree.vertex_count()}, {"edges", tree.edge_count()}}}});
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const CollapseStep& step = run.steps[i];
    out << "step " << i + 1 << ": panel " << to_string(step.chosen) << " orbit "
        << step.orbit_size << " complexity " << step.before.to_string(top) << " -> "
        << step.after.to_string(top) << " cubes " << counts_text(cube_counts(step.result.output))
        << " digest " << hex64(provenance_digest(step.result)) << "\n";
  }
  out << "tree: V=" << tree.vertex_count() << " E=" << tree.edge_count() << "\n";
  return out.str();
}

std::string dual_text(const Wallspace& space, const DualComplex& dual) {
  std::ostringstream comment;
  comment << "dual of " << space.point_count() << " points and " << space.walls().size()
          << " walls; vertices are the flip component of the principal orientation of "
          << space.point(0) << "\n";
  for (std::size_t w = 0; w < space.walls().size(); ++w) {
    comment << "wall " << w << (dual.wall_realized[w] ? " realized" : " unrealized") << "\n";
  }
  for (std::size_t h = 0; h < dual.wall_of_hyperplane.size(); ++h) {
    comment << "hyperplane " << h << " wall " << dual.wall_of_hyperplane[h] << "\n";
  }
  std::string text = comment.str();
  text.pop_back();
  return serialize_complex(dual.complex, text);
}

std::string stallings_report(const Wallspace& space, const StallingsResult& result,
                             bool json_output) {
  const CubeComplex& tree = result.run.final_complex;
  if (json_output) {
    return dump({{"points", space.point_count()},
                 {"walls", space.walls().size()},
                 {"dual_vertices", result.dual.complex.vertex_count()},
                 {"dual_dimension", result.dimension},
                 {"group_order", result.group_order},
                 {"subdivided", result.subdivided},
                 {"steps", result.run.steps.size()},
                 {"tree", {{"vertices", tree.vertex_count()}, {"edges", tree.edge_count()}}},
                 {"edge_stabilizers", result.edge_stabilizers},
                 {"wall_stabilizers", result.wall_stabilizers}});
  }
  std::ostringstream out;
  out << "dual V=" << result.dual.complex.vertex_count() << " E="
      << result.dual.complex.edge_count() << " dim=" << result.dimension << "\n"
      << "group order " << result.group_order << (result.subdivided ? " (subdivided)" : "") << "\n";
  for (std::size_t i = 0; i < result.run.steps.size(); ++i) {
    const CollapseStep& step = result.run.steps[i];
    out << "step " << i + 1 << ": panel " << to_string(step.chosen) << " orbit "
        << step.orbit_size << " complexity " << step.before.to_string(result.dimension) << " -> "
        << step.after.to_string(result.dimension) << "\n";
  }
  out << "edge stabilizers " << counts_text(result.edge_stabilizers) << "\n"
      << "wall stabilizers " << counts_text(result.wall_stabilizers) << "\n"
      << "tree: V=" << tree.vertex_count() << " E=" << tree.edge_count() << "\n";
  return out.str();
}

std::string fuzz_report(std::uint64_t seed, int count, const FuzzSummary& s, bool json_output) {
  if (json_output) {
    return dump({{"seed", seed},
                 {"count", count},
                 {"complexes", s.complexes},
                 {"nontrivial_actions", s.nontrivial_actions},
                 {"steps", s.steps},
                 {"max_steps", s.max_steps},
                 {"over_step_bound", s.over_step_bound},
                 {"failures", s.failures},
                 {"first_failure", s.first_failure}});
  }
  std::ostringstream out;
  out << "seed " << seed << "\n"
      << "complexes " << s.complexes << " (" << s.nontrivial_actions << " with symmetry)\n"
      << "steps " << s.steps << " max " << s.max_steps << "\n"
      << "over step bound " << s.over_step_bound << "\n"
      << "failures " << s.failures << "\n";
  if (s.failures) out << "first failure: " << s.first_failure << "\n";
  return out.str();
}

}  // namespace panelcollapse
