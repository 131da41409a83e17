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

#include <string>

#include "doctest.h"
#include "panelcollapse/error.hpp"
#include "panelcollapse/random.hpp"
#include "panelcollapse/text_format.hpp"
#include "support.hpp"

namespace pc = panelcollapse;
using pc::CubeComplex;

namespace {

int parse_error_line(const std::string& text) {
  try {
    pc::parse_complex(text);
  } catch (const pc::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("complex files") {
  const CubeComplex cx = pc::parse_complex(
      "# leading comment\n\ncubecomplex v1\nvertex a  # trailing comment\nvertex b\nedge a b\n");
  CHECK(cx.vertex_count() == 2);
  CHECK(cx.edge_count() == 1);
  CHECK(pc::serialize_complex(cx) == "cubecomplex v1\nvertex a\nvertex b\nedge a b\n");
  CHECK(pc::serialize_complex(cx, "two lines\nof comment") ==
        "cubecomplex v1\n# two lines\n# of comment\nvertex a\nvertex b\nedge a b\n");
}

TEST_CASE("complex parse errors carry line numbers") {
  CHECK(parse_error_line("vertex a\n") == 1);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("cubecomplex v1\nvertex a\nbogus a\n") == 3);
  CHECK(parse_error_line("cubecomplex v1\nvertex a\nedge a b\n") == 3);
  CHECK(parse_error_line("cubecomplex v1\nvertex a b\n") == 2);
  CHECK(parse_error_line("cubecomplex v1\nvertex a\nvertex a\n") == 3);
  CHECK(parse_error_line("cubecomplex v2\n") == 1);
  CHECK_THROWS_AS(pc::parse_complex("cubecomplex v1\nvertex a\nedge a a\n"), pc::Error);
  CHECK_THROWS_AS(pc::parse_complex("cubecomplex v1\n"), pc::StructuralError);
}

TEST_CASE("round trips keep canonical ids") {
  pc::Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const CubeComplex cx = pc::random_complex(rng, 3, 80);
    const std::string text = pc::serialize_complex(cx);
    const CubeComplex back = pc::parse_complex(text);
    CHECK(pc::serialize_complex(back) == text);
    REQUIRE(back.vertex_count() == cx.vertex_count());
    for (pc::VertexId v = 0; v < static_cast<pc::VertexId>(cx.vertex_count()); ++v) {
      CHECK(back.name(v) == cx.name(v));
    }
    for (pc::EdgeId e = 0; e < static_cast<pc::EdgeId>(cx.edge_count()); ++e) {
      CHECK(back.edge(e) == cx.edge(e));
      CHECK(back.edge_hyperplane(e) == cx.edge_hyperplane(e));
    }
  }
}

TEST_CASE("action files") {
  const CubeComplex sq = pc::testing::load_complex("square.cc");
  const pc::GroupAction flip = pc::parse_action(pc::testing::read_fixture("square_flip.act"), sq);
  CHECK(flip.order() == 2);
  CHECK(pc::serialize_action(sq, flip) == "action v1\ngen b->c c->b\n");
  CHECK(pc::parse_action(pc::testing::read_fixture("trivial.act"), sq).order() == 1);
  CHECK_THROWS_AS(pc::parse_action("action v1\ngen a->z\n", sq), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_action("action v1\ngen a-b\n", sq), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_action("action v1\ngen a->b a->c\n", sq), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_action("action v1\nmap a->b\n", sq), pc::ParseError);
  // a->b alone is not a bijection.
  CHECK_THROWS_AS(pc::parse_action("action v1\ngen a->b\n", sq), pc::StructuralError);
  // a<->b breaks the edge a-c.
  CHECK_THROWS_AS(pc::parse_action("action v1\ngen a->b b->a\n", sq), pc::StructuralError);
}

TEST_CASE("wallspace files") {
  const pc::Wallspace ws = pc::parse_wallspace(pc::testing::read_fixture("crossing3.ws"));
  CHECK(ws.point_count() == 8);
  CHECK(ws.walls().size() == 3);
  CHECK(ws.symmetries().size() == 1);
  CHECK_THROWS_AS(pc::parse_wallspace("wallspace v1\npoint a\npoint a\n"), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_wallspace("wallspace v1\npoint a\npoint b\nwall a b\n"), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_wallspace("wallspace v1\npoint a\nwall a | z\n"), pc::ParseError);
  CHECK_THROWS_AS(pc::parse_wallspace("wallspace v1\npoint a\npoint b\nwall a | a,b\n"),
                  pc::StructuralError);
}

TEST_CASE("provenance sidecars") {
  const CubeComplex sq = pc::testing::square();
  const std::vector<pc::Panel> panels{pc::make_panel(sq, {0, 1, pc::Side::kMinus}),
                                      pc::make_panel(sq, {1, 0, pc::Side::kMinus})};
  const pc::CollapseResult r = pc::collapse(sq, panels);
  const std::string text = pc::serialize_provenance(r);
  CHECK(text == "provenance v1\nedge a d crosses 0 1\nedge b d crosses 1\nedge c d crosses 0\n");
  CHECK(pc::parse_provenance(text, r.output) == r.edge_crossings);
  CHECK_THROWS_AS(pc::parse_provenance("provenance v1\nedge a d crosses 0 1\n", r.output),
                  pc::ParseError);
  CHECK_THROWS_AS(pc::parse_provenance("provenance v1\nedge a b crosses 0\n", r.output),
                  pc::ParseError);
  CHECK_THROWS_AS(pc::parse_provenance("provenance v1\nedge a d crosses x\n", r.output),
                  pc::ParseError);
}
