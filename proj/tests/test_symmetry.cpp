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

#include "doctest.h"
#include "panelcollapse/error.hpp"
#include "panelcollapse/random.hpp"
#include "panelcollapse/symmetry.hpp"
#include "support.hpp"

namespace pc = panelcollapse;
using pc::Automorphism;
using pc::ComplexityVector;
using pc::CubeComplex;
using pc::GroupAction;

namespace {

// Square a b / c d: reflection in the diagonal a-d and the quarter turn.
const Automorphism kFlip{{0, 2, 1, 3}};
const Automorphism kTurn{{1, 3, 0, 2}};  // a->b->d->c->a

}  // namespace

TEST_CASE("automorphism algebra") {
  CHECK(Automorphism::identity(4).is_identity());
  CHECK((kFlip * kFlip).is_identity());
  CHECK((kTurn * kTurn.inverse()).is_identity());
  CHECK_FALSE((kTurn * kTurn).is_identity());
  CHECK((kTurn * kTurn * kTurn * kTurn).is_identity());
}

TEST_CASE("group closure") {
  const CubeComplex sq = pc::testing::square();
  CHECK(GroupAction::trivial(sq).order() == 1);
  CHECK(GroupAction::generate(sq, {kFlip}).order() == 2);
  CHECK(GroupAction::generate(sq, {kTurn}).order() == 4);
  CHECK(GroupAction::generate(sq, {kTurn, kFlip}).order() == 8);
  CHECK(GroupAction::generate(sq, {kFlip}).elements().front().is_identity());
  // a<->b alone breaks the edge a-c.
  CHECK_THROWS_AS(GroupAction::generate(sq, {Automorphism{{1, 0, 2, 3}}}), pc::StructuralError);
  CHECK_THROWS_AS(GroupAction::generate(sq, {Automorphism{{0, 0, 2, 3}}}), pc::StructuralError);
  CHECK_THROWS_AS(GroupAction::generate(sq, {Automorphism{{0, 1, 2}}}), pc::StructuralError);
  CHECK_THROWS_AS(GroupAction::generate(pc::hypercube(3), pc::automorphisms(pc::hypercube(3), 100), 10),
                  pc::PreconditionError);
}

TEST_CASE("automorphism counts") {
  CHECK(pc::automorphisms(pc::testing::square(), 100).size() == 8);
  CHECK(pc::automorphisms(pc::hypercube(3), 100).size() == 48);
  CHECK(pc::automorphisms(pc::path_complex(3), 100).size() == 2);
  CHECK(pc::automorphisms(pc::star_complex(4), 100).size() == 24);
}

TEST_CASE("inversions") {
  const CubeComplex sq = pc::testing::square();
  const pc::ActionReport flip = pc::check_action(sq, GroupAction::generate(sq, {kFlip}));
  CHECK(flip.inversion_free());
  const pc::ActionReport turn = pc::check_action(sq, GroupAction::generate(sq, {kTurn}));
  CHECK_FALSE(turn.inversion_free());
  // The half turn fixes and flips both hyperplanes.
  CHECK(turn.inverted == std::vector<bool>{true, true});
  CHECK(pc::image_of_hyperplane(sq, kFlip, 0) == 1);
}

TEST_CASE("panel orbits") {
  const CubeComplex sq = pc::testing::square();
  const GroupAction g = GroupAction::generate(sq, {kFlip});
  const pc::Panel p = pc::make_panel(sq, {0, 1, pc::Side::kMinus});
  const std::vector<pc::Panel> orbit = pc::panel_orbit(sq, g, p);
  REQUIRE(orbit.size() == 2);
  CHECK(orbit[1].key == pc::PanelKey{1, 0, pc::Side::kMinus});
  CHECK(pc::image_of_panel(sq, kFlip, p) == orbit[1].key);
}

TEST_CASE("complexity vectors") {
  const CubeComplex q3 = pc::hypercube(3);
  const ComplexityVector trivial = pc::complexity(q3, GroupAction::trivial(q3));
  CHECK(trivial.to_string() == "(1,6)");
  CHECK(trivial.entries() == std::vector<std::size_t>{1, 6});
  CHECK(trivial.to_string(4) == "(0,1,6)");
  // The order-3 rotation about the main diagonal: two orbits of squares.
  const Automorphism rotate{{0, 2, 4, 6, 1, 3, 5, 7}};
  CHECK(pc::complexity(q3, GroupAction::generate(q3, {rotate})).to_string() == "(1,2)");
  const ComplexityVector lower{{8, 10, 3}};
  CHECK(lower.to_string() == "(3)");
  CHECK(lower < trivial);
  CHECK(ComplexityVector{{1, 0, 0}}.is_zero());
  CHECK(ComplexityVector{{1, 0, 0}} == ComplexityVector{{1}});
  CHECK(pc::complexity(pc::star_complex(3), GroupAction::trivial(pc::star_complex(3))).is_zero());
}

TEST_CASE("subdivision") {
  const CubeComplex sq = pc::testing::square();
  const pc::Subdivision sub = pc::subdivide(sq);
  CHECK(sub.complex.vertex_count() == 9);
  CHECK(sub.complex.edge_count() == 12);
  CHECK(sub.complex.cube_count(2) == 4);
  CHECK(sub.complex.find_vertex("a").has_value());
  CHECK(sub.complex.find_vertex("(a|b)").has_value());
  CHECK(sub.complex.find_vertex("(a|b|c|d)").has_value());
  const CubeComplex q3sub = pc::subdivide(pc::hypercube(3)).complex;
  CHECK(q3sub.vertex_count() == 27);
  CHECK(q3sub.edge_count() == 54);
  CHECK(q3sub.cube_count(2) == 36);
  CHECK(q3sub.cube_count(3) == 8);

  const GroupAction turn = GroupAction::generate(sq, {kTurn});
  const GroupAction pushed = pc::push_forward(sq, sub, turn);
  CHECK(pushed.order() == 4);
  CHECK(pc::check_action(sub.complex, pushed).inversion_free());
}

TEST_CASE("one equivariant step on the three-cube") {
  const CubeComplex q3 = pc::hypercube(3);
  const auto step = pc::equivariant_collapse_step(q3, GroupAction::trivial(q3));
  REQUIRE(step.has_value());
  CHECK(step->chosen == pc::PanelKey{0, 1, pc::Side::kMinus});
  CHECK(step->orbit_size == 1);
  CHECK(step->before.to_string(3) == "(1,6)");
  CHECK(step->after.to_string(3) == "(0,3)");
  CHECK(step->result.output.edge_count() == 10);
  CHECK_FALSE(pc::equivariant_collapse_step(pc::star_complex(2),
                                            GroupAction::trivial(pc::star_complex(2))));
}

TEST_CASE("runs to a tree") {
  const CubeComplex q3 = pc::hypercube(3);
  const pc::RunResult run = pc::run_to_tree(q3, GroupAction::trivial(q3));
  CHECK(run.steps.size() <= 4);
  CHECK(pc::testing::is_tree(run.final_complex));
  CHECK(run.final_complex.vertex_count() == 8);
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    CHECK(run.steps[i].after < run.steps[i].before);
    if (i) CHECK(run.steps[i].before == run.steps[i - 1].after);
  }
  CHECK(run.steps.back().after.is_zero());

  const CubeComplex tree = pc::star_complex(3);
  CHECK(pc::run_to_tree(tree, GroupAction::trivial(tree)).steps.empty());

  // Inversions are refused; the subdivision is the caller's job.
  const CubeComplex sq = pc::testing::square();
  CHECK_THROWS_AS(pc::run_to_tree(sq, GroupAction::generate(sq, {kTurn})), pc::PreconditionError);
  const pc::Subdivision sub = pc::subdivide(sq);
  const pc::RunResult sub_run = pc::run_to_tree(sub.complex, pc::push_forward(sq, sub, GroupAction::generate(sq, {kTurn})));
  CHECK(pc::testing::is_tree(sub_run.final_complex));
  CHECK(sub_run.final_action.order() == 4);
}

TEST_CASE("symmetric powers keep their symmetry") {
  const pc::SymmetricInstance inst = pc::symmetric_power(pc::path_complex(2), 2);
  CHECK(inst.action.order() == 2);
  const pc::RunResult run = pc::run_to_tree(inst.complex, inst.action);
  CHECK(pc::testing::is_tree(run.final_complex));
  for (const pc::CollapseStep& step : run.steps) CHECK(step.orbit_size == 2);
  // The shift still permutes the edges of the final tree.
  for (const Automorphism& g : run.final_action.elements()) {
    for (const pc::Edge& e : run.final_complex.edges()) {
      CHECK(run.final_complex.find_edge(g.image[e.u], g.image[e.v]).has_value());
    }
  }
}

TEST_CASE("runs are deterministic") {
  pc::Rng rng(23);
  const CubeComplex cx = pc::random_complex(rng, 3, 80);
  const GroupAction g = pc::random_inversion_free_action(cx, rng);
  const pc::RunResult a = pc::run_to_tree(cx, g);
  const pc::RunResult b = pc::run_to_tree(cx, g);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(pc::provenance_digest(a.steps[i].result) == pc::provenance_digest(b.steps[i].result));
    CHECK(a.steps[i].chosen == b.steps[i].chosen);
  }
}
