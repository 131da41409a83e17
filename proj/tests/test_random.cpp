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

#include <set>

#include "doctest.h"
#include "panelcollapse/random.hpp"
#include "support.hpp"

namespace pc = panelcollapse;
using pc::CubeComplex;

TEST_CASE("standard complexes") {
  const CubeComplex q2 = pc::hypercube(2);
  CHECK(q2.name(0) == "00");
  CHECK(q2.name(1) == "10");
  CHECK(pc::hypercube(0).name(0) == "o");
  CHECK(pc::path_complex(3).vertex_count() == 4);
  CHECK(pc::path_complex(3).name(3) == "p3");
  CHECK(pc::star_complex(3).name(0) == "c");
  const CubeComplex prod = pc::product(pc::star_complex(2), pc::path_complex(1));
  CHECK(prod.vertex_count() == 6);
  CHECK(prod.edge_count() == 7);
  CHECK(prod.cube_count(2) == 2);
  CHECK(prod.name(1) == "c.p1");
}

TEST_CASE("random complexes respect their bounds") {
  pc::Rng rng(1);
  for (int i = 0; i < 40; ++i) {
    const CubeComplex t = pc::random_tree(rng, 7);
    CHECK(t.vertex_count() == 7);
    CHECK(pc::testing::is_tree(t));
    const CubeComplex cx = pc::random_complex(rng, 4, 200);
    CHECK(cx.dimension() <= 4);
    CHECK(cx.vertex_count() <= 200);
    CHECK(cx.euler_characteristic() == 1);
  }
}

TEST_CASE("convex subcomplexes are convex") {
  pc::Rng rng(2);
  const CubeComplex host = pc::grid_complex(3, 3);
  for (int i = 0; i < 20; ++i) {
    const CubeComplex sub = pc::random_convex_subcomplex(host, rng, 2);
    std::vector<pc::VertexId> ids;
    for (const std::string& name : sub.names()) ids.push_back(*host.find_vertex(name));
    std::sort(ids.begin(), ids.end());
    CHECK(host.convex_hull(ids) == ids);
  }
}

TEST_CASE("random actions are inversion free") {
  pc::Rng rng(4);
  std::size_t nontrivial = 0;
  for (int i = 0; i < 20; ++i) {
    const CubeComplex cx = pc::random_complex(rng, 3, 40);
    const pc::GroupAction g = pc::random_inversion_free_action(cx, rng);
    CHECK(pc::check_action(cx, g).inversion_free());
    nontrivial += g.order() > 1 ? 1 : 0;
  }
  CHECK(nontrivial > 5);
  const pc::SymmetricInstance cube = pc::symmetric_power(pc::path_complex(1), 3);
  CHECK(cube.action.order() == 3);
  CHECK(pc::check_action(cube.complex, cube.action).inversion_free());
}

TEST_CASE("random wallspaces") {
  pc::Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const pc::Wallspace ws = pc::random_wallspace(rng, 5, 4);
    CHECK(ws.point_count() == 5);
    CHECK(ws.walls().size() <= 4);
    std::set<pc::Wall> unique(ws.walls().begin(), ws.walls().end());
    CHECK(unique.size() == ws.walls().size());
  }
}

TEST_CASE("fuzz runs are reproducible and clean") {
  const pc::FuzzSummary a = pc::run_fuzz(99, 12);
  const pc::FuzzSummary b = pc::run_fuzz(99, 12);
  CHECK(a.failures == 0);
  CHECK(a.first_failure.empty());
  CHECK(a.over_step_bound == 0);
  CHECK(a.steps == b.steps);
  CHECK(a.complexes == b.complexes);
}
