#include "pnmax/verify.hpp"

#include <algorithm>
#include <sstream>

#include "pnmax/efficiency.hpp"
#include "pnmax/families.hpp"
#include "pnmax/formats.hpp"
#include "pnmax/formulas.hpp"
#include "pnmax/generators.hpp"
#include "pnmax/grid_dp.hpp"
#include "pnmax/inequalities.hpp"
#include "pnmax/routing.hpp"
#include "pnmax/tree_dp.hpp"

namespace pnmax {

namespace {

SolveOptions solve_opts(const VerifyOptions& v) {
  SolveOptions o;
  o.parallel_shards = v.threads;
  return o;
}

bool two_colorable(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  color.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v).vertices()) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Does some subset turn every vertex into a private neighbor of the
// allowed flavors? Direct check used as the oracle for the structural
// I/S/IS classes.
bool exists_all_pn_set(const Graph& g, bool allow_int, bool allow_self) {
  const int n = g.order();
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
    const VertexSet us = VertexSet::from_low_word(u);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      switch (vertex_status(g, us, v)) {
        case VertexPnStatus::InternalPrivate:
          ok = allow_int;
          break;
        case VertexPnStatus::SelfPrivate:
          ok = allow_self;
          break;
        default:
          ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool closed_neighborhoods_partition(const Graph& g, const VertexSet& d) {
  VertexSet covered;
  for (int v : d.vertices()) {
    const VertexSet nb = g.closed_neighborhood(v);
    if (covered.intersects(nb)) return false;
    covered = covered | nb;
  }
  return covered == g.all_vertices();
}

}  // namespace

SuiteReport verify_formulas(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.name = "formulas";
  const int max_n = std::min(opts.max_n, 14);
  const int prism_max = std::min(opts.max_n, 12);
  const FormulaCheckReport check =
      check_formulas_against_oracle(max_n, prism_max, solve_opts(opts));
  std::ostringstream out;
  out << "suite formulas: max_n=" << max_n << " prism_max_n=" << prism_max << "\n";
  out << "  checks=" << check.checks << " mismatches=" << check.mismatches.size()
      << "\n";
  for (const auto& m : check.mismatches) {
    out << "  MISMATCH " << formula_family_name(m.family) << " " << kind_name(m.kind)
        << " p=" << m.p1 << "," << m.p2 << " formula=" << m.formula
        << " solver=" << m.solver << "\n";
  }
  rep.pass = check.pass();
  out << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  rep.text = out.str();
  return rep;
}

SuiteReport verify_inequalities(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.name = "inequalities";
  Rng rng(opts.seed);
  std::ostringstream out;
  out << "suite inequalities: graphs=" << opts.graphs << " max_n=" << opts.max_n
      << " seed=" << opts.seed << "\n";
  int violations = 0;
  long equalities = 0;
  int bipartite_checked = 0;
  for (int i = 0; i < opts.graphs; ++i) {
    const int n = rng.range(2, opts.max_n);
    const double p = 0.10 + 0.50 * (rng.below(1000) / 1000.0);
    const Graph g = random_connected_graph(n, p, rng);
    const InequalityReport r = verify_inequality_report(g, solve_opts(opts));
    equalities += r.equalities;
    if (!r.all_hold) {
      ++violations;
      out << "  VIOLATION graph6=" << emit_graph6(g);
      for (const auto& rel : r.relations) {
        if (!rel.holds) out << " " << rel.name << "(" << rel.lhs << "," << rel.rhs << ")";
      }
      out << "\n";
    }
    std::vector<int> color;
    if (two_colorable(g, color)) {
      ++bipartite_checked;
      const int espn = r.pn[3];
      if (espn < (n + 1) / 2) {
        ++violations;
        out << "  VIOLATION bipartite ESPN>=ceil(n/2) graph6=" << emit_graph6(g)
            << " espn=" << espn << " n=" << n << "\n";
      }
    }
  }
  out << "  violations=" << violations << " equalities=" << equalities
      << " bipartite_checked=" << bipartite_checked << "\n";
  rep.pass = violations == 0;
  out << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  rep.text = out.str();
  return rep;
}

SuiteReport verify_tree_bound(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.name = "tree-bound";
  std::ostringstream out;
  out << "suite tree-bound: trees=" << opts.trees << " max_n=" << opts.max_n
      << " seed=" << opts.seed << "\n";
  int violations = 0;
  int tight = 0;

  out << "  corona tight cases:";
  for (int m : {2, 4, 6, 8}) {
    const TreeBoundReport r = verify_tree_lower_bound(corona_path(m));
    if (!r.holds || !r.tight || r.ipn != m) {
      ++violations;
      out << " corona_path:" << m << "=BAD";
    } else {
      ++tight;
      out << " corona_path:" << m;
    }
  }
  out << "\n";

  int free_checked = 0;
  for (const Graph& t : free_trees_up_to(std::min(opts.max_n, 10))) {
    if (t.order() < 2) continue;
    ++free_checked;
    const TreeBoundReport r = verify_tree_lower_bound(t);
    if (!r.holds) {
      ++violations;
      out << "  VIOLATION free tree graph6=" << emit_graph6(t) << " ipn=" << r.ipn
          << " bound=" << r.bound << "\n";
    }
    if (r.tight) ++tight;
  }

  Rng rng(opts.seed);
  for (int i = 0; i < opts.trees; ++i) {
    const int n = rng.range(2, std::max(2, opts.max_n));
    const Graph t = random_tree(n, rng);
    const TreeBoundReport r = verify_tree_lower_bound(t);
    if (!r.holds) {
      ++violations;
      out << "  VIOLATION random tree graph6=" << emit_graph6(t) << " ipn=" << r.ipn
          << " bound=" << r.bound << "\n";
    }
    if (r.tight) ++tight;
  }
  out << "  free_trees_checked=" << free_checked << " random_trees=" << opts.trees
      << " tight_cases=" << tight << " violations=" << violations << "\n";
  rep.pass = violations == 0;
  out << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  rep.text = out.str();
  return rep;
}

SuiteReport verify_efficiency(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.name = "efficiency";
  std::ostringstream out;
  out << "suite efficiency: seed=" << opts.seed << "\n";
  int violations = 0;
  const SolveOptions sopts = solve_opts(opts);

  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ++violations;
      out << "  VIOLATION " << what << "\n";
    }
  };

  for (int n = 3; n <= 12; ++n) {
    const EfficiencyClass c = efficiency_classes(cycle_graph(n), sopts);
    expect(c.es == (n % 3 == 0), "cycle:" + std::to_string(n) + " ES iff n%3==0");
    expect(c.eis == (n != 5), "cycle:" + std::to_string(n) + " EIS except n=5");
    if (c.es) {
      expect(closed_neighborhoods_partition(cycle_graph(n), *c.es_witness),
             "cycle:" + std::to_string(n) + " ES witness partitions V");
    }
  }
  for (int n = 1; n <= 13; ++n) {
    const EfficiencyClass c = efficiency_classes(path_graph(n), sopts);
    expect(c.ei == (n % 4 != 1), "path:" + std::to_string(n) + " EI iff n%4!=1");
    if (c.es) {
      expect(closed_neighborhoods_partition(path_graph(n), *c.es_witness),
             "path:" + std::to_string(n) + " ES witness partitions V");
    }
    expect(!c.es || c.eis, "path:" + std::to_string(n) + " ES implies EIS");
    expect(!c.ei || c.eis, "path:" + std::to_string(n) + " EI implies EIS");
  }
  for (int n = 2; n <= 12; ++n) {
    const EfficiencyClass c = efficiency_classes(grid_graph(n, 2), sopts);
    if (n <= 10) {
      expect(c.eis, "grid:" + std::to_string(n) + ",2 EIS");
    }
    expect(c.es == (n % 2 == 1), "grid:" + std::to_string(n) + ",2 ES iff n odd");
  }

  // structural classes against the definitional brute force
  Rng rng(opts.seed);
  for (int i = 0; i < 40; ++i) {
    const int n = rng.range(1, 7);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.chance(0.25)) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const EfficiencyClass c = efficiency_classes(g, sopts);
    expect(c.i == exists_all_pn_set(g, true, false),
           "I class vs brute force graph6=" + emit_graph6(g));
    expect(c.s == exists_all_pn_set(g, false, true),
           "S class vs brute force graph6=" + emit_graph6(g));
    expect(c.is == exists_all_pn_set(g, true, true),
           "IS class vs brute force graph6=" + emit_graph6(g));
  }

  // constructions round-trip
  for (int i = 0; i < 25; ++i) {
    const EfficiencyMode mode = (i % 2 == 0) ? EfficiencyMode::Ei : EfficiencyMode::Eis;
    ConstructionSpec spec;
    const int parts = rng.range(1, 3);
    for (int p = 0; p < parts; ++p) {
      const int pick = rng.range(0, mode == EfficiencyMode::Eis ? 2 : 1);
      if (pick == 0) {
        spec.parts.push_back({PartKind::DoubleStarPart, rng.range(1, 3), rng.range(1, 3)});
      } else if (pick == 1) {
        spec.parts.push_back({PartKind::TwoMarkStarPart, rng.range(2, 4), 0});
      } else {
        spec.parts.push_back({PartKind::CenterStarPart, rng.range(1, 3), 0});
      }
    }
    // lay out parts to find each one's first unmarked vertex, then chain
    std::vector<int> unmarked_rep;
    int at = 0;
    for (const auto& part : spec.parts) {
      if (part.kind == PartKind::DoubleStarPart) {
        unmarked_rep.push_back(at + 2);
        at += 2 + part.p + part.q;
      } else if (part.kind == PartKind::TwoMarkStarPart) {
        unmarked_rep.push_back(at + 2);
        at += 1 + part.p;
      } else {
        unmarked_rep.push_back(at + 1);
        at += 1 + part.p;
      }
    }
    for (std::size_t p = 0; p + 1 < spec.parts.size(); ++p) {
      spec.joins.emplace_back(unmarked_rep[p], unmarked_rep[p + 1]);
    }
    const ConstructResult r = construct_efficient(spec, mode);
    const EfficiencyClass c = efficiency_classes(r.graph, sopts);
    const bool want = mode == EfficiencyMode::Ei ? c.ei : c.eis;
    expect(want, "construction round-trip graph6=" + emit_graph6(r.graph));
    // marked closed neighborhoods partition the vertex set
    VertexSet covered;
    bool disjoint = true;
    for (const auto& pm : r.part_marked) {
      VertexSet nb;
      for (int v : pm.vertices()) nb = nb | r.graph.closed_neighborhood(v);
      if (covered.intersects(nb)) disjoint = false;
      covered = covered | nb;
    }
    expect(disjoint && covered == r.graph.all_vertices(),
           "construction marked partition graph6=" + emit_graph6(r.graph));
  }

  out << "  violations=" << violations << "\n";
  rep.pass = violations == 0;
  out << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  rep.text = out.str();
  return rep;
}

SuiteReport verify_reductions(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.name = "reductions";
  std::ostringstream out;
  out << "suite reductions: triples=" << opts.triples
      << " max_n=" << std::min(opts.max_n, 12) << " seed=" << opts.seed << "\n";
  Rng rng(opts.seed);
  int violations = 0;
  constexpr ParameterKind kinds[] = {ParameterKind::Epn, ParameterKind::Espn,
                                     ParameterKind::Eipn, ParameterKind::Ispn,
                                     ParameterKind::Eispn};
  for (int i = 0; i < opts.triples; ++i) {
    const int n = rng.range(2, std::min(opts.max_n, 12));
    const double p = 0.10 + 0.50 * (rng.below(1000) / 1000.0);
    const Graph g = random_connected_graph(n, p, rng);
    const VertexSet a = random_subset(n, rng);
    const ParameterKind kind = kinds[i % 5];
    const VertexSet b = reduce_to_class(g, a, kind);
    const bool subset = b.is_subset_of(a);
    const bool pred = set_class_predicate(g, b, reduction_target(kind));
    const bool monotone = pn_score(g, b, kind) >= pn_score(g, a, kind);
    if (!subset || !pred || !monotone) {
      ++violations;
      out << "  VIOLATION kind=" << kind_name(kind) << " graph6=" << emit_graph6(g)
          << " a=" << a.to_string() << " b=" << b.to_string()
          << (subset ? "" : " not-subset") << (pred ? "" : " predicate-fails")
          << (monotone ? "" : " score-drops") << "\n";
    }
  }
  out << "  violations=" << violations << "\n";
  rep.pass = violations == 0;
  out << (rep.pass ? "  PASS" : "  FAIL") << "\n";
  rep.text = out.str();
  return rep;
}

std::vector<SuiteReport> verify_all(const VerifyOptions& opts) {
  return {verify_formulas(opts), verify_inequalities(opts), verify_tree_bound(opts),
          verify_efficiency(opts), verify_reductions(opts)};
}

}  // namespace pnmax
