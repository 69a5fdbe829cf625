#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pnmax/families.hpp"
#include "pnmax/generators.hpp"
#include "pnmax/solver.hpp"

using namespace pnmax;

TEST_CASE("solve_pn on named instances") {
  // order-10 gadget: IPN 6
  CHECK(solve_pn(fixtures::ipn_gap_graph(), ParameterKind::Ipn).value == 6);
  // K_{4,7}: ESPN 9
  CHECK(solve_pn(complete_bipartite(4, 7), ParameterKind::Espn).value == 9);
  // small grid sanity
  CHECK(solve_pn(grid_graph(4, 3), ParameterKind::Epn).value == 8);
}

TEST_CASE("solve_pn agrees with the naive oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng.range(1, 10), 0.35, rng);
    const auto all = solve_pn_all(g);
    for (int i = 0; i < kNumPnKinds; ++i) {
      const PnMask m = pn_mask(kPnKinds[i]);
      CHECK(all[i].value == oracle::max_pn(g, m.self, m.internal, m.external));
      // witness scores what the solver claims
      CHECK(pn_score(g, all[i].witness, kPnKinds[i]) == all[i].value);
    }
  }
}

TEST_CASE("witness is the lexicographically least optimum") {
  // alpha(P_4) = 2 with optimal sets {0,2}, {0,3}, {1,3}
  const auto r = solve_pn(path_graph(4), ParameterKind::Spn);
  CHECK(r.value == 2);
  CHECK(r.witness.vertices() == std::vector<int>{0, 2});

  // exhaustively confirm on random graphs for ESPN
  Rng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_connected_graph(rng.range(2, 8), 0.3, rng);
    const auto res = solve_pn(g, ParameterKind::Espn);
    VertexSet best;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const VertexSet u = VertexSet::from_low_word(mask);
      if (pn_score(g, u, ParameterKind::Espn) == res.value) {
        if (!found || VertexSet::lex_less(u, best)) best = u;
        found = true;
      }
    }
    CHECK(found);
    CHECK(res.witness == best);
  }
}

TEST_CASE("sharded and branch-and-bound solves match the plain sweep") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(rng.range(1, 11), 0.3, rng);
    const ParameterKind kind = kPnKinds[trial % kNumPnKinds];
    SolveOptions plain;
    const auto base = solve_pn(g, kind, plain);

    SolveOptions sharded;
    sharded.parallel_shards = 4;
    const auto s4 = solve_pn(g, kind, sharded);
    CHECK(s4.value == base.value);
    CHECK(s4.witness == base.witness);

    SolveOptions bb;
    bb.use_bounds = true;
    const auto b1 = solve_pn(g, kind, bb);
    CHECK(b1.value == base.value);
    CHECK(b1.witness == base.witness);

    bb.parallel_shards = 4;
    const auto b4 = solve_pn(g, kind, bb);
    CHECK(b4.value == base.value);
    CHECK(b4.witness == base.witness);
  }
}

TEST_CASE("set class solves on named instances") {
  CHECK(solve_set_class(complete_bipartite(4, 7), ParameterKind::Ir).value == 7);
  CHECK(solve_set_class(fixtures::ipn_gap_graph(), ParameterKind::AlphaStar).value == 2);
  // gamma of the 6x2 grid
  CHECK(solve_set_class(grid_graph(6, 2), ParameterKind::Gamma).value == 4);
}

TEST_CASE("set class solves match the definitional oracle") {
  Rng rng(43);
  constexpr ParameterKind kinds[] = {
      ParameterKind::Alpha,       ParameterKind::AlphaStar,
      ParameterKind::Oir,         ParameterKind::Ir,
      ParameterKind::Ooir,        ParameterKind::Alpha1,
      ParameterKind::Coir,        ParameterKind::Gamma,
      ParameterKind::UpperGamma,  ParameterKind::GammaP,
      ParameterKind::UpperGammaP, ParameterKind::GammaTp,
      ParameterKind::UpperGammaTp, ParameterKind::GammaPvt,
      ParameterKind::UpperGammaPvt};
  for (int trial = 0; trial < 18; ++trial) {
    const Graph g = random_connected_graph(rng.range(1, 9), 0.35, rng);
    for (ParameterKind kind : kinds) {
      const auto r = solve_set_class(g, kind);
      int expected = oracle::opt_cardinality(g, kind);
      if (kind == ParameterKind::AlphaStar && expected >= 0) expected /= 2;
      if (expected < 0) {
        CHECK_FALSE(r.feasible);
      } else {
        CHECK(r.feasible);
        CHECK(r.value == expected);
        CHECK(set_class_predicate(g, r.witness, kind));
      }
    }
    // batch solve agrees with the individual ones
    const auto batch = solve_set_class_all(g);
    for (int i = 0; i < kNumSetClassKinds; ++i) {
      CHECK(batch[i].value == solve_set_class(g, kSetClassKinds[i]).value);
    }
  }
}

TEST_CASE("total perfect domination may not exist") {
  const auto none = solve_set_class(complete_graph(3), ParameterKind::GammaTp);
  CHECK_FALSE(none.feasible);
  const auto k1 = solve_set_class(Graph(1), ParameterKind::GammaTp);
  CHECK_FALSE(k1.feasible);
  const auto c4 = solve_set_class(cycle_graph(4), ParameterKind::GammaTp);
  CHECK(c4.feasible);
  CHECK(c4.value == 2);
}

TEST_CASE("perfect domination only-trivial flag") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng.range(1, 8), 0.35, rng);
    const auto upper = solve_set_class(g, ParameterKind::UpperGammaP);
    // the whole vertex set is vacuously perfect dominating
    CHECK(upper.feasible);
    CHECK(upper.value == g.order());
    bool proper_exists = false;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << g.order()); ++mask) {
      if (oracle::domination_predicate(g, oracle::mask_to_set(mask, g.order()),
                                       ParameterKind::GammaP)) {
        proper_exists = true;
        break;
      }
    }
    CHECK(upper.only_trivial == !proper_exists);
  }
}

TEST_CASE("solver rejects oversized graphs and wrong kinds") {
  SolveOptions opts;
  opts.max_width = 8;
  CHECK_THROWS_AS(solve_pn(grid_graph(5, 2), ParameterKind::Epn, opts),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_pn(path_graph(3), ParameterKind::Ir), std::invalid_argument);
  CHECK_THROWS_AS(solve_set_class(path_graph(3), ParameterKind::Epn),
                  std::invalid_argument);
}

TEST_CASE("reduction procedures") {
  // a set that is already open irredundant is a fixed point
  const Graph p6 = path_graph(6);
  const VertexSet oir_set = VertexSet::from_vertices({1, 4});
  REQUIRE(set_class_predicate(p6, oir_set, ParameterKind::Oir));
  CHECK(reduce_to_class(p6, oir_set, ParameterKind::Epn) == oir_set);

  // an ESPN-optimal set of K_{4,7} is already irredundant of size 2
  const Graph k47 = complete_bipartite(4, 7);
  const auto opt = solve_pn(k47, ParameterKind::Espn);
  REQUIRE(opt.value == 9);
  const VertexSet reduced = reduce_to_class(k47, opt.witness, ParameterKind::Espn);
  CHECK(reduced == opt.witness);
  CHECK(reduced.count() == 2);
  CHECK(set_class_predicate(k47, reduced, ParameterKind::Ir));
  CHECK(pn_score(k47, reduced, ParameterKind::Espn) == 9);

  // random property: subset, score never drops, target class holds
  Rng rng(53);
  constexpr ParameterKind kinds[] = {ParameterKind::Epn, ParameterKind::Espn,
                                     ParameterKind::Eipn, ParameterKind::Ispn,
                                     ParameterKind::Eispn};
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(rng.range(2, 12), 0.3, rng);
    const VertexSet a = random_subset(g.order(), rng);
    const ParameterKind kind = kinds[trial % 5];
    const VertexSet b = reduce_to_class(g, a, kind);
    CHECK(b.is_subset_of(a));
    CHECK(pn_score(g, b, kind) >= pn_score(g, a, kind));
    CHECK(set_class_predicate(g, b, reduction_target(kind)));
  }

  CHECK_THROWS_AS(reduce_to_class(p6, oir_set, ParameterKind::Spn),
                  std::invalid_argument);
}

TEST_CASE("inequality chains hold on a random corpus") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(rng.range(2, 10), 0.35, rng);
    const auto pn = solve_pn_all(g);
    const int spn = pn[0].value, ipn = pn[1].value, epn = pn[2].value,
              espn = pn[3].value, eipn = pn[4].value, ispn = pn[5].value,
              eispn = pn[6].value;
    CHECK(spn <= espn);
    CHECK(espn <= eispn);
    CHECK(spn <= ispn);
    CHECK(ispn <= eispn);
    CHECK(ipn <= ispn);
    CHECK(ipn <= eipn);
    CHECK(eipn <= eispn);
    CHECK(epn <= espn);
    CHECK(epn <= eipn);

    const auto cls = solve_set_class_all(g);
    CHECK(cls[0].value == spn);          // alpha == SPN
    CHECK(2 * cls[1].value <= ipn);      // 2 alpha* <= IPN
    CHECK(cls[2].value <= epn);          // OIR <= EPN
    CHECK(cls[3].value <= espn);         // IR <= ESPN
    CHECK(cls[4].value <= eipn);         // OOIR <= EIPN
    CHECK(cls[5].value <= ispn);         // alpha_1 <= ISPN
    CHECK(cls[6].value <= eispn);        // COIR <= EISPN
    // 1-dependence is attained exactly
    CHECK(cls[5].value == ispn);

    // reducing an optimal ISPN witness yields a 1-dependent set of equal score
    const VertexSet b = reduce_to_class(g, pn[5].witness, ParameterKind::Ispn);
    CHECK(pn_score(g, b, ParameterKind::Ispn) == ispn);
    CHECK(static_cast<int>(b.count()) == cls[5].value);
  }
}
