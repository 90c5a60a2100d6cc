#include <cmath>

#include "doctest.h"
#include "symq/invariants.hpp"
#include "symq/io.hpp"
#include "test_util.hpp"

using namespace symq;

namespace {
Diagram trefoil() {
  return pd_to_diagram(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
}
Diagram figure_eight() {
  return pd_to_diagram(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"));
}
}  // namespace

TEST_CASE("coloring counts for the classical examples") {
  SymmetricQuandleTable r3 = builtin_target("R3-id");
  CHECK(count_colorings(trefoil(), r3) == 9);
  CHECK(count_colorings(figure_eight(), r3) == 3);

  Diagram unknot = pd_to_diagram(parse_pd("O"));
  for (const std::string& name : builtin_target_names(6)) {
    SymmetricQuandleTable t = builtin_target(name);
    CHECK(count_colorings(unknot, t) == static_cast<std::uint64_t>(t.size()));
  }

  // unknot drawn with one kink still counts like the unknot
  Diagram kink = pd_to_diagram(parse_pd("X[1,2,2,1]"));
  for (const std::string& name : builtin_target_names(6)) {
    SymmetricQuandleTable t = builtin_target(name);
    CHECK(count_colorings(kink, t) == static_cast<std::uint64_t>(t.size()));
  }
}

TEST_CASE("propagation agrees with brute force") {
  std::vector<Diagram> diagrams{trefoil(), figure_eight(),
                                pd_to_diagram(parse_pd("X[1,2,2,1]"))};
  testutil::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial)
    diagrams.push_back(testutil::random_diagram(rng, 5, 4));
  for (const Diagram& d : diagrams)
    for (const SymmetricQuandleTable& t : testutil::builtin_pool(4)) {
      double space = std::pow(double(t.size()), double(d.m));
      if (space > 1e6) continue;
      CHECK(count_colorings(d, t) == testutil::brute_force_colorings(d, t));
    }
}

TEST_CASE("enumeration is ordered, checked, and truncates") {
  SymmetricQuandleTable r3 = builtin_target("R3-id");
  Diagram tre = trefoil();
  ColoringList list = enumerate_colorings(tre, r3, 100);
  CHECK_FALSE(list.truncated);
  REQUIRE(list.colorings.size() == 9);
  CHECK(std::is_sorted(list.colorings.begin(), list.colorings.end()));
  int constants = 0;
  for (const Coloring& c : list.colorings) {
    CHECK(is_coloring(tre, r3, c));
    if (std::count(c.begin(), c.end(), c[0]) == 6) ++constants;
  }
  CHECK(constants == 3);

  ColoringList capped = enumerate_colorings(tre, r3, 4);
  CHECK(capped.truncated);
  CHECK(capped.colorings.size() == 4);

  SymmetricQuandleTable one = builtin_target("triv-1");
  CHECK(enumerate_colorings(figure_eight(), one, 10).colorings.size() == 1);
}

TEST_CASE("kei targets admit all constant colorings") {
  for (const char* name : {"R3-id", "R5-id"}) {
    SymmetricQuandleTable t = builtin_target(name);
    for (const Diagram& d : {trefoil(), figure_eight()}) {
      ColoringList list = enumerate_colorings(d, t, 10000);
      for (int v = 0; v < t.size(); ++v) {
        Coloring constant(d.m, v);
        CHECK(is_coloring(d, t, constant));
      }
      CHECK(list.colorings.size() >= static_cast<std::size_t>(t.size()));
    }
  }
}

TEST_CASE("coloring counts are flip-invariant") {
  for (const Diagram& d : {trefoil(), figure_eight()})
    for (const std::string& name : builtin_target_names(6)) {
      SymmetricQuandleTable t = builtin_target(name);
      std::uint64_t base = count_colorings(d, t);
      for (int k = 0; k < d.m; ++k)
        CHECK(count_colorings(flip_normal(d, k), t) == base);
    }
}

TEST_CASE("colorings biject with homomorphisms") {
  for (const Diagram& d : {trefoil(), figure_eight()})
    for (const SymmetricQuandleTable& t : testutil::builtin_pool(6))
      CHECK(coloring_hom_crosscheck(d, t));

  testutil::Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    Diagram d = testutil::random_diagram(rng, 4, 4);
    for (const SymmetricQuandleTable& t : testutil::builtin_pool(4))
      CHECK(coloring_hom_crosscheck(d, t));
  }
}

TEST_CASE("multi-component links") {
  // Hopf link: two components, each passing under once
  Diagram hopf = pd_to_diagram(parse_pd("X[4,1,3,2] X[2,3,1,4]"));
  CHECK(hopf.m == 4);
  CHECK(hopf.strata.size() == 2);
  SymmetricQuandleTable r3 = builtin_target("R3-id");
  CHECK(count_colorings(hopf, r3) == 3);
  CHECK(testutil::brute_force_colorings(hopf, r3) == 3);
  SymmetricQuandleTable t2 = builtin_target("triv-2");
  CHECK(count_colorings(hopf, t2) == 4);
  CHECK(coloring_hom_crosscheck(hopf, r3));

  // two-component unlink with no crossings
  Diagram unlink = pd_to_diagram(parse_pd("O O"));
  CHECK(unlink.m == 2);
  CHECK(count_colorings(unlink, r3) == 9);
}

TEST_CASE("sheet and semi-sheet colorings agree on oriented diagrams") {
  // with default normals the upper merges are plain identifications, so
  // counting over the merged (oriented) presentation gives the same number
  std::vector<const char*> codes{
      "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
      "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
      "X[2,8,3,7] X[4,10,5,9] X[6,2,7,1] X[8,4,9,3] X[10,6,1,5]",
      "X[4,1,3,2] X[2,3,1,4]"};
  for (const char* code : codes) {
    Diagram d = pd_to_diagram(parse_pd(code));
    SymQuandlePresentation merged = oriented_presentation_from_diagram(d);
    for (const char* name : {"R3-id", "R5-id", "triv-2"}) {
      SymmetricQuandleTable t = builtin_target(name);
      CHECK(hom_count(merged, t) == count_colorings(d, t));
    }
  }
  // classical counts: the cinquefoil is 5-colorable, the trefoil is not
  Diagram cinq = pd_to_diagram(
      parse_pd("X[2,8,3,7] X[4,10,5,9] X[6,2,7,1] X[8,4,9,3] X[10,6,1,5]"));
  SymmetricQuandleTable r5 = builtin_target("R5-id");
  CHECK(count_colorings(cinq, r5) == 25);
  CHECK(count_colorings(trefoil(), r5) == 5);
  CHECK(testutil::brute_force_colorings(trefoil(), r5) == 5);
  SymmetricQuandleTable r5f8 = builtin_target("R5-id");
  CHECK(count_colorings(figure_eight(), r5f8) == 25);
}

TEST_CASE("knot group pipeline") {
  KnotGroupResult tre = knot_group_pipeline(trefoil());
  CHECK(tre.invariant_factors == std::vector<long long>{0});
  CHECK(tre.group.generators.size() == 6);

  KnotGroupResult unknot = knot_group_pipeline(pd_to_diagram(parse_pd("O")));
  CHECK(unknot.invariant_factors == std::vector<long long>{0});

  // one semi-sheet meeting itself with incoherent upper normals: the
  // presentation collapses to a single rho-fixed generator
  Diagram projective;
  projective.m = 1;
  projective.dimension = 2;
  projective.strata.push_back({0, 0, false, 0, 0, 0, true});
  SymQuandlePresentation p = presentation_from_diagram(projective);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] ==
        Relation{fsr_gen(0), fsr_gen(0, true)});
  KnotGroupResult proj = knot_group_pipeline(projective);
  CHECK(proj.invariant_factors == std::vector<long long>{2});
}
