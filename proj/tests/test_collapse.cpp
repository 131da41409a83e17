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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle/fundament_oracle.hpp"
#include "panelcollapse/collapse.hpp"
#include "panelcollapse/error.hpp"
#include "panelcollapse/random.hpp"
#include "support.hpp"

namespace pc = panelcollapse;
using pc::CubeComplex;
using pc::Panel;
using pc::Side;

namespace {

std::set<std::vector<pc::VertexId>> cell_sets(const pc::Fundament& f) {
  std::set<std::vector<pc::VertexId>> out;
  for (const auto& c : f.cells) out.insert(c.vertices);
  return out;
}

std::vector<std::string> edge_names(const CubeComplex& cx) {
  std::vector<std::string> out;
  for (const pc::Edge& e : cx.edges()) out.push_back(cx.name(e.u) + "-" + cx.name(e.v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("collapsing one panel of a three-cube") {
  const CubeComplex cx = pc::testing::load_complex("cube3.cc");
  const std::vector<Panel> panels{pc::make_panel(cx, {0, 1, Side::kMinus})};
  const pc::CollapseResult r = pc::collapse(cx, panels);
  CHECK(r.output.vertex_count() == 8);
  CHECK(r.output.edge_count() == 10);
  CHECK(r.output.cube_count(2) == 3);
  CHECK(r.output.dimension() == 2);
  CHECK(r.output.euler_characteristic() == 1);
  CHECK(r.diagonal_edges == 0);
  // Lost: two edges, the panel square, two squares through it, the 3-cube.
  CHECK(r.removed_cubes == 6);
  CHECK(r.output.names().size() == 8);
  CHECK(std::equal(r.output.names().begin(), r.output.names().end(), cx.names().begin()));
  CHECK(pc::testing::provenance_defect(cx, r).empty());
}

TEST_CASE("classification of the three-cube with one panel") {
  const CubeComplex cx = pc::hypercube(3);
  const std::vector<Panel> panels{pc::make_panel(cx, {0, 1, Side::kMinus})};
  const pc::CubeClassification cls = pc::classify(cx, panels);
  CHECK(std::count(cls.internal_edge.begin(), cls.internal_edge.end(), true) == 2);
  CHECK(std::count(cls.cube_kind.begin(), cls.cube_kind.end(), pc::CubeKind::kInternal) == 3);
  // The top cube and the two squares through the internal edges off the panel.
  CHECK(std::count(cls.cube_kind.begin(), cls.cube_kind.end(), pc::CubeKind::kExternal) == 3);
  CHECK(std::string(pc::to_string(pc::CubeKind::kCompletelyExternal)) == "completely-external");
}

TEST_CASE("two-panel orbit on a square") {
  const CubeComplex sq = pc::testing::square();
  const std::vector<Panel> panels{pc::make_panel(sq, {0, 1, Side::kMinus}),
                                  pc::make_panel(sq, {1, 0, Side::kMinus})};
  const pc::CollapseResult r = pc::collapse(sq, panels);
  CHECK(r.output.vertex_count() == 4);
  CHECK(r.output.edge_count() == 3);
  CHECK(r.output.is_tree());
  CHECK(r.diagonal_edges == 1);
  // The persistent corner d keeps both its edges and gains the diagonal to a.
  CHECK(edge_names(r.output) == std::vector<std::string>{"a-d", "b-d", "c-d"});
  const pc::EdgeId diag = *r.output.find_edge(0, 3);
  CHECK(r.edge_crossings[diag] == std::vector<pc::HyperplaneId>{0, 1});
  CHECK(pc::testing::provenance_defect(sq, r).empty());

  const pc::PersistentSubcube ps = pc::persistent_subcube(sq, panels, sq.maximal_cubes().front());
  CHECK(ps.kappa == 2);
  CHECK(ps.separators == std::vector<pc::HyperplaneId>{0, 1});
}

TEST_CASE("bad panel sets are rejected") {
  const CubeComplex sq = pc::testing::square();
  const std::vector<Panel> facing{pc::make_panel(sq, {0, 1, Side::kMinus}),
                                  pc::make_panel(sq, {0, 1, Side::kPlus})};
  CHECK_THROWS_AS(pc::check_panel_set(sq, facing), pc::PreconditionError);
  CHECK_THROWS_AS(pc::collapse(sq, facing), pc::PreconditionError);
  Panel forged = facing.front();
  forged.internal_edges.clear();
  CHECK_THROWS_AS(pc::collapse(sq, std::vector<Panel>{forged}), pc::PreconditionError);
  CHECK_THROWS_AS(pc::persistent_subcube(sq, std::vector<Panel>{facing.front()},
                                         *sq.find_cube(0, std::vector<pc::HyperplaneId>{0})),
                  pc::PreconditionError);
}

TEST_CASE("random collapses keep provenance and agree with the oracle") {
  pc::Rng rng(17);
  std::size_t collapses = 0;
  std::size_t cubes = 0;
  for (int i = 0; i < 15; ++i) {
    const CubeComplex cx = pc::random_complex(rng, 3, 60);
    for (const auto& panels : pc::testing::panel_sets(cx, rng, 5)) {
      const pc::CollapseResult r = pc::collapse(cx, panels);
      CHECK(pc::testing::provenance_defect(cx, r).empty());
      CHECK(r.removed_cubes >= 1);
      CHECK(pc::hyperplane_provenance(cx, r) == r.hyperplane_map);
      ++collapses;
      const pc::oracle::FundamentOracle oracle(cx, panels);
      for (pc::CubeId m : cx.maximal_cubes()) {
        const pc::Fundament f = pc::fundament(cx, panels, m);
        const pc::oracle::OracleFundament o = oracle.fundament(m);
        CHECK(cell_sets(f) == o.cells);
        CHECK(f.d_connected == o.d_connected);
        CHECK((f.kind == pc::CubeKind::kInternal) == o.internal);
        ++cubes;
      }
    }
  }
  CHECK(collapses > 20);
  CHECK(cubes > 50);
}
