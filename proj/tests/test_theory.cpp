#include <doctest.h>

#include "fixtures.hpp"
#include "pnmax/efficiency.hpp"
#include "pnmax/families.hpp"
#include "pnmax/formulas.hpp"
#include "pnmax/generators.hpp"
#include "pnmax/inequalities.hpp"
#include "pnmax/solver.hpp"
#include "pnmax/tree_dp.hpp"

using namespace pnmax;

TEST_CASE("closed-form spot values") {
  CHECK(formula_value(FormulaFamily::Path, ParameterKind::Epn, 5) == 3);
  CHECK(formula_value(FormulaFamily::Cycle, ParameterKind::Eispn, 5) == 4);
  CHECK(formula_value(FormulaFamily::PrismEspn, ParameterKind::Espn, 4) == 7);
  CHECK(formula_value(FormulaFamily::CompleteBipartite, ParameterKind::Epn, 2, 3) == 3);
  CHECK(formula_value(FormulaFamily::Path, ParameterKind::Espn, 9) == 9);
  CHECK(formula_value(FormulaFamily::CompleteBipartite, ParameterKind::Espn, 4, 7) == 9);
  // independence values behind SPN
  CHECK(formula_value(FormulaFamily::Path, ParameterKind::Spn, 7) == 4);
  CHECK(formula_value(FormulaFamily::Cycle, ParameterKind::Spn, 7) == 3);
  CHECK(formula_value(FormulaFamily::CompleteBipartite, ParameterKind::Spn, 3, 5) == 5);

  CHECK_THROWS_AS(formula_value(FormulaFamily::PrismEspn, ParameterKind::Ipn, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_value(FormulaFamily::Path, ParameterKind::Ir, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_value(FormulaFamily::Path, ParameterKind::Ipn, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_value(FormulaFamily::CompleteBipartite,
                                ParameterKind::Ipn, 4, 2),
                  std::invalid_argument);
}

TEST_CASE("closed forms match enumeration on small ranges") {
  const FormulaCheckReport rep = check_formulas_against_oracle(10, 6);
  CHECK(rep.checks > 0);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("efficiency classes on named graphs") {
  CHECK_FALSE(efficiency_classes(cycle_graph(4)).es);
  const auto c5 = efficiency_classes(cycle_graph(5));
  CHECK_FALSE(c5.es);
  CHECK_FALSE(c5.eis);
  CHECK(efficiency_classes(path_graph(9)).es);
  CHECK_FALSE(efficiency_classes(path_graph(5)).ei);
  CHECK(efficiency_classes(path_graph(6)).ei);

  // structural classes
  const Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
  const auto cls = efficiency_classes(two_k2);
  CHECK(cls.i);
  CHECK(cls.is);
  CHECK_FALSE(cls.s);
  CHECK(efficiency_classes(Graph(4)).s);
  const Graph mixed = build_graph(3, {{0, 1}});
  CHECK_FALSE(efficiency_classes(mixed).i);
  CHECK(efficiency_classes(mixed).is);

  // implications
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng.range(2, 9), 0.3, rng);
    const auto c = efficiency_classes(g);
    if (c.es) CHECK(c.eis);
    if (c.ei) CHECK(c.eis);
  }
}

TEST_CASE("constructed graphs land in the requested class") {
  // a double star S(1,2) alone is EIS-efficient of order 5
  ConstructionSpec single;
  single.parts.push_back({PartKind::DoubleStarPart, 1, 2});
  const auto r1 = construct_efficient(single, EfficiencyMode::Eis);
  CHECK(r1.graph.order() == 5);
  CHECK(efficiency_classes(r1.graph).eis);

  // one star with three leaves, EI mode
  ConstructionSpec star;
  star.parts.push_back({PartKind::TwoMarkStarPart, 3, 0});
  const auto r2 = construct_efficient(star, EfficiencyMode::Ei);
  CHECK(r2.graph.order() == 4);
  CHECK(efficiency_classes(r2.graph).ei);

  // two stars joined by one leaf-leaf edge
  ConstructionSpec two;
  two.parts.push_back({PartKind::TwoMarkStarPart, 2, 0});
  two.parts.push_back({PartKind::TwoMarkStarPart, 3, 0});
  two.joins.emplace_back(2, 5);  // second leaf of part 1, first leaf of part 2
  const auto r3 = construct_efficient(two, EfficiencyMode::Ei);
  CHECK(is_connected(r3.graph));
  CHECK(efficiency_classes(r3.graph).ei);
  CHECK(solve_pn(r3.graph, ParameterKind::Eipn).value == r3.graph.order());

  // errors
  ConstructionSpec bad = two;
  bad.joins = {{0, 5}};  // 0 is marked
  CHECK_THROWS_AS(construct_efficient(bad, EfficiencyMode::Ei), std::invalid_argument);
  ConstructionSpec disconnected = two;
  disconnected.joins.clear();
  CHECK_THROWS_AS(construct_efficient(disconnected, EfficiencyMode::Ei),
                  std::invalid_argument);
  ConstructionSpec f3;
  f3.parts.push_back({PartKind::CenterStarPart, 2, 0});
  CHECK_THROWS_AS(construct_efficient(f3, EfficiencyMode::Ei), std::invalid_argument);
  CHECK_NOTHROW(construct_efficient(f3, EfficiencyMode::Eis));
}

TEST_CASE("inequality report flags equalities and strict gaps") {
  const auto gap = verify_inequality_report(fixtures::ipn_gap_graph());
  CHECK(gap.all_hold);
  bool found = false;
  for (const auto& rel : gap.relations) {
    if (rel.name == "2*ALPHA_STAR<=IPN") {
      found = true;
      CHECK(rel.lhs == 4);
      CHECK(rel.rhs == 6);
      CHECK_FALSE(rel.equal);
    }
  }
  CHECK(found);

  const auto k47 = verify_inequality_report(complete_bipartite(4, 7));
  CHECK(k47.all_hold);
  for (const auto& rel : k47.relations) {
    if (rel.name == "IR<=ESPN") {
      CHECK(rel.lhs == 7);
      CHECK(rel.rhs == 9);
    }
  }

  Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(rng.range(2, 10), 0.35, rng);
    CHECK(verify_inequality_report(g).all_hold);
  }
}

TEST_CASE("espn tree family achieves four fifths of the order") {
  for (int k = 2; k <= 4; ++k) {
    const Graph t = espn_tree(k);
    CHECK(t.order() == 5 * k);
    const int espn = solve_pn_tree(t, ParameterKind::Espn).value;
    CHECK(espn == 4 * k);
    if (k <= 3) {
      CHECK(solve_pn(t, ParameterKind::Espn).value == 4 * k);
    }
  }

  for (int k : {2, 5, 12, 25}) {
    const auto fam = espn_tree_family_value(k);
    CHECK(fam.graph.order() == 5 * k);
    CHECK(fam.espn == 4 * k);
    CHECK(fam.ratio_num == 4);
    CHECK(fam.ratio_den == 5);
    CHECK(fam.matches_four_fifths);
  }
  CHECK_THROWS_AS(espn_tree_family_value(1), std::invalid_argument);
  CHECK_THROWS_AS(espn_tree_family_value(26), std::invalid_argument);  // 130 > 128
}
