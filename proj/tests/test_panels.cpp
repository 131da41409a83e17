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
#include "panelcollapse/error.hpp"
#include "panelcollapse/panels.hpp"
#include "panelcollapse/random.hpp"
#include "panelcollapse/symmetry.hpp"
#include "support.hpp"

namespace pc = panelcollapse;
using pc::CubeComplex;
using pc::Panel;
using pc::PanelKey;
using pc::Side;

TEST_CASE("panel keys") {
  const PanelKey k{2, 0, Side::kPlus};
  CHECK(pc::to_string(k) == "2,0,+");
  CHECK(pc::parse_panel_key("2,0,+") == k);
  CHECK(pc::parse_panel_key("0,1,-") == PanelKey{0, 1, Side::kMinus});
  CHECK_THROWS_AS(pc::parse_panel_key("0,1"), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_panel_key("0,1,x"), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_panel_key("a,1,-"), pc::ParseError);
  // Canonical order: abutting, extremalising, then '-' before '+'.
  CHECK(PanelKey{0, 1, Side::kMinus} < PanelKey{0, 1, Side::kPlus});
  CHECK(PanelKey{0, 2, Side::kMinus} < PanelKey{1, 0, Side::kMinus});
}

TEST_CASE("extremal panels of the three-cube") {
  const CubeComplex cx = pc::testing::load_complex("cube3.cc");
  const std::vector<Panel> panels = pc::extremal_panels(cx);
  // Every ordered pair of distinct hyperplanes, on either side.
  CHECK(panels.size() == 12);
  for (const Panel& p : panels) {
    CHECK(p.internal_edges.size() == 2);
    CHECK(p.vertices.size() == 4);
  }
  CHECK(std::is_sorted(panels.begin(), panels.end(),
                       [](const Panel& a, const Panel& b) { return a.key < b.key; }));
  CHECK(pc::find_extremal_panel(cx)->key == PanelKey{0, 1, Side::kMinus});
  CHECK(pc::crossing_pairs(cx).size() == 3);
}

TEST_CASE("extremality in a grid") {
  // In a 2 x 2 grid of squares each strip has one extremal end per crossing
  // hyperplane: 4 hyperplanes, 2 crossings each.
  const CubeComplex grid = pc::grid_complex(2, 2);
  CHECK(pc::extremal_panels(grid).size() == 8);
  for (const Panel& p : pc::extremal_panels(grid)) CHECK(p.internal_edges.size() == 1);
}

TEST_CASE("extremality preconditions") {
  const CubeComplex sq = pc::testing::square();
  CHECK(pc::is_extremal(sq, {0, 1, Side::kMinus}));
  CHECK_THROWS_AS(pc::is_extremal(sq, {0, 0, Side::kMinus}), pc::PreconditionError);
  CHECK_THROWS_AS(pc::is_extremal(sq, {0, 5, Side::kMinus}), pc::PreconditionError);
  CHECK_THROWS_AS(pc::make_panel(pc::star_complex(3), {0, 1, Side::kMinus}), pc::PreconditionError);
}

TEST_CASE("trees have no extremal panels") {
  const CubeComplex tree = pc::star_complex(4);
  CHECK(pc::extremal_panels(tree).empty());
  CHECK_FALSE(pc::find_extremal_panel(tree).has_value());
}

TEST_CASE("no facing panels in a square") {
  const CubeComplex sq = pc::testing::square();
  const Panel ab = pc::make_panel(sq, {0, 1, Side::kMinus});
  const Panel cd = pc::make_panel(sq, {0, 1, Side::kPlus});
  const Panel ac = pc::make_panel(sq, {1, 0, Side::kMinus});
  // Opposite sides of one square face each other.
  CHECK_FALSE(pc::no_facing_panels(sq, std::vector<Panel>{ab, cd}));
  // Panels meeting at a corner do not.
  CHECK(pc::no_facing_panels(sq, std::vector<Panel>{ab, ac}));
  CHECK(pc::no_facing_panels(sq, std::vector<Panel>{ab}));
}

TEST_CASE("panels are convex and every non-tree has one") {
  pc::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const CubeComplex cx = pc::random_complex(rng, 3, 80);
    const std::vector<Panel> panels = pc::extremal_panels(cx);
    CHECK(panels.empty() == cx.is_tree());
    for (const Panel& p : panels) {
      CHECK(cx.convex_hull(p.vertices) == p.vertices);
      CHECK_FALSE(p.internal_edges.empty());
      for (pc::EdgeId e : p.internal_edges) CHECK(cx.edge_hyperplane(e) == p.key.abutting);
    }
  }
}

TEST_CASE("orbits of extremal panels under inversion-free actions do not face") {
  const std::vector<CubeComplex> complexes{pc::testing::square(), pc::hypercube(3),
                                           pc::grid_complex(2, 2),
                                           pc::product(pc::star_complex(3), pc::path_complex(1))};
  std::size_t checked = 0;
  for (const CubeComplex& cx : complexes) {
    for (const pc::Automorphism& g : pc::automorphisms(cx, 2000)) {
      const pc::GroupAction action = pc::GroupAction::generate(cx, {g});
      if (!pc::check_action(cx, action).inversion_free()) continue;
      for (const Panel& p : pc::extremal_panels(cx)) {
        CHECK(pc::no_facing_panels(cx, pc::panel_orbit(cx, action, p)));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
