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

#include "panelcollapse/text_format.hpp"

#include <map>
#include <set>
#include <sstream>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::string rest;  // text after the first token
};

std::vector<Line> tokenize(std::string_view text, const std::string& header) {
  std::vector<Line> lines;
  int number = 0;
  bool seen_header = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    Line line{number, {}, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    if (!seen_header) {
      if (line.tokens.size() != 2 || line.tokens[0] + " " + line.tokens[1] != header) {
        throw ParseError(number, "expected header '" + header + "'");
      }
      seen_header = true;
      continue;
    }
    auto first = raw.find(line.tokens[0]);
    line.rest = raw.substr(first + line.tokens[0].size());
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  if (!seen_header) throw ParseError(number, "missing header '" + header + "'");
  return lines;
}

// "u->v" tokens into a permutation over names; unmapped points are fixed.
std::vector<int> parse_mapping(const Line& line, const std::map<std::string, int>& index) {
  std::vector<int> image(index.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<int>(i);
  std::set<int> sources;
  for (std::size_t t = 1; t < line.tokens.size(); ++t) {
    const std::string& tok = line.tokens[t];
    auto arrow = tok.find("->");
    if (arrow == std::string::npos) throw ParseError(line.number, "expected u->v, got '" + tok + "'");
    std::string from = tok.substr(0, arrow), to = tok.substr(arrow + 2);
    auto a = index.find(from), b = index.find(to);
    if (a == index.end()) throw ParseError(line.number, "unknown name '" + from + "'");
    if (b == index.end()) throw ParseError(line.number, "unknown name '" + to + "'");
    if (!sources.insert(a->second).second) {
      throw ParseError(line.number, "'" + from + "' is mapped twice");
    }
    image[a->second] = b->second;
  }
  return image;
}

std::vector<int> parse_side(const std::string& text, const std::map<std::string, int>& index,
                            int line) {
  std::vector<int> side;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream trim(item);
    std::string name, extra;
    trim >> name;
    if (name.empty() || (trim >> extra)) throw ParseError(line, "malformed wall side '" + text + "'");
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown point '" + name + "'");
    side.push_back(it->second);
  }
  return side;
}

}  // namespace

GraphText parse_graph(std::string_view text) {
  GraphText graph;
  std::map<std::string, VertexId> index;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Line& line : tokenize(text, "cubecomplex v1")) {
    const std::string& kind = line.tokens[0];
    if (kind == "vertex") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'vertex <name>'");
      if (!index.emplace(line.tokens[1], static_cast<VertexId>(graph.names.size())).second) {
        throw ParseError(line.number, "duplicate vertex '" + line.tokens[1] + "'");
      }
      graph.names.push_back(line.tokens[1]);
    } else if (kind == "edge") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'edge <name> <name>'");
      VertexId ends[2];
      for (int i = 0; i < 2; ++i) {
        auto it = index.find(line.tokens[1 + i]);
        if (it == index.end()) {
          throw ParseError(line.number, "unknown vertex '" + line.tokens[1 + i] + "'");
        }
        ends[i] = it->second;
      }
      if (ends[0] == ends[1]) {
        throw StructuralError("line " + std::to_string(line.number) + ": self-loop at '" + line.tokens[1] + "'");
      }
      if (!seen.insert({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}).second) {
        throw StructuralError("line " + std::to_string(line.number) + ": duplicate edge '" + line.tokens[1] +
                              " " + line.tokens[2] + "'");
      }
      graph.edges.push_back({ends[0], ends[1]});
    } else {
      throw ParseError(line.number, "unknown directive '" + kind + "'");
    }
  }
  if (graph.names.empty()) throw StructuralError("complex has no vertices");
  return graph;
}

CubeComplex parse_complex(std::string_view text) {
  GraphText graph = parse_graph(text);
  return CubeComplex::from_graph(std::move(graph.names), graph.edges);
}

std::string serialize_complex(const CubeComplex& complex, std::string_view comment) {
  std::ostringstream out;
  out << "cubecomplex v1\n";
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  }
  for (const std::string& name : complex.names()) out << "vertex " << name << "\n";
  for (const Edge& e : complex.edges()) {
    out << "edge " << complex.name(e.u) << " " << complex.name(e.v) << "\n";
  }
  return out.str();
}

GroupAction parse_action(std::string_view text, const CubeComplex& complex) {
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    index[complex.name(static_cast<VertexId>(v))] = static_cast<int>(v);
  }
  std::vector<Automorphism> generators;
  for (const Line& line : tokenize(text, "action v1")) {
    if (line.tokens[0] != "gen") throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    std::vector<int> image = parse_mapping(line, index);
    generators.push_back({std::vector<VertexId>(image.begin(), image.end())});
  }
  return GroupAction::generate(complex, std::move(generators));
}

std::string serialize_action(const CubeComplex& complex, const GroupAction& action) {
  std::ostringstream out;
  out << "action v1\n";
  for (const Automorphism& g : action.generators()) {
    out << "gen";
    for (std::size_t v = 0; v < g.image.size(); ++v) {
      if (g.image[v] != static_cast<VertexId>(v)) {
        out << " " << complex.name(static_cast<VertexId>(v)) << "->" << complex.name(g.image[v]);
      }
    }
    out << "\n";
  }
  return out.str();
}

Wallspace parse_wallspace(std::string_view text) {
  std::vector<std::string> points;
  std::map<std::string, int> index;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> walls;
  std::vector<PointPermutation> symmetries;
  std::vector<const Line*> deferred;
  auto lines = tokenize(text, "wallspace v1");
  for (const Line& line : lines) {
    if (line.tokens[0] == "point") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'point <name>'");
      if (!index.emplace(line.tokens[1], static_cast<int>(points.size())).second) {
        throw ParseError(line.number, "duplicate point '" + line.tokens[1] + "'");
      }
      points.push_back(line.tokens[1]);
    } else if (line.tokens[0] == "wall" || line.tokens[0] == "sym") {
      deferred.push_back(&line);
    } else {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }
  for (const Line* line : deferred) {
    if (line->tokens[0] == "wall") {
      auto bar = line->rest.find('|');
      if (bar == std::string::npos || line->rest.find('|', bar + 1) != std::string::npos) {
        throw ParseError(line->number, "expected 'wall <p,...> | <q,...>'");
      }
      walls.push_back({parse_side(line->rest.substr(0, bar), index, line->number),
                       parse_side(line->rest.substr(bar + 1), index, line->number)});
    } else {
      symmetries.push_back(parse_mapping(*line, index));
    }
  }
  return Wallspace(std::move(points), std::move(walls), std::move(symmetries));
}

std::string serialize_provenance(const CollapseResult& result) {
  std::ostringstream out;
  out << "provenance v1\n";
  const CubeComplex& c = result.output;
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const Edge& uv = c.edge(static_cast<EdgeId>(e));
    out << "edge " << c.name(uv.u) << " " << c.name(uv.v) << " crosses";
    for (HyperplaneId h : result.edge_crossings[e]) out << " " << h;
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<HyperplaneId>> parse_provenance(std::string_view text,
                                                         const CubeComplex& complex) {
  std::vector<std::vector<HyperplaneId>> crossings(complex.edge_count());
  std::vector<bool> seen(complex.edge_count(), false);
  for (const Line& line : tokenize(text, "provenance v1")) {
    if (line.tokens[0] != "edge" || line.tokens.size() < 5 || line.tokens[3] != "crosses") {
      throw ParseError(line.number, "expected 'edge <u> <v> crosses <h>...'");
    }
    auto u = complex.find_vertex(line.tokens[1]), v = complex.find_vertex(line.tokens[2]);
    if (!u || !v) throw ParseError(line.number, "unknown vertex");
    auto e = complex.find_edge(*u, *v);
    if (!e) throw ParseError(line.number, "not an edge of the complex");
    if (seen[*e]) throw ParseError(line.number, "duplicate edge");
    seen[*e] = true;
    for (std::size_t t = 4; t < line.tokens.size(); ++t) {
      try {
        std::size_t used = 0;
        int h = std::stoi(line.tokens[t], &used);
        if (used != line.tokens[t].size() || h < 0) throw std::invalid_argument("h");
        crossings[*e].push_back(h);
      } catch (const std::exception&) {
        throw ParseError(line.number, "bad hyperplane id '" + line.tokens[t] + "'");
      }
    }
  }
  for (std::size_t e = 0; e < seen.size(); ++e) {
    if (!seen[e]) throw ParseError(0, "provenance misses an edge");
  }
  return crossings;
}

}  // namespace panelcollapse
