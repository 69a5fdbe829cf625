#include "pnmax/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pnmax/families.hpp"
#include "pnmax/grid_dp.hpp"
#include "pnmax/tree_dp.hpp"

namespace pnmax {

namespace {

[[noreturn]] void unsupported(FormulaFamily family, ParameterKind kind) {
  throw std::invalid_argument("no closed form for " + kind_name(kind) + " on " +
                              formula_family_name(family));
}

long path_value(ParameterKind kind, long n) {
  if (n < 2) throw std::invalid_argument("path formulas need n >= 2");
  const long ceil_nm1_3 = (n + 1) / 3;  // ceil((n-1)/3)
  switch (kind) {
    case ParameterKind::Spn:
      return (n + 1) / 2;  // independence number
    case ParameterKind::Ipn:
      return 2 * ceil_nm1_3;
    case ParameterKind::Epn:
      return n % 3 == 2 ? 2 * (n / 3) + 1 : 2 * (n / 3);
    case ParameterKind::Eipn:
      return (n % 4 == 0 || n % 4 == 1) ? 4 * (n / 4) : n;
    case ParameterKind::Espn:
    case ParameterKind::Eispn:
      return n;
    case ParameterKind::Ispn:
      return n % 3 == 1 ? 2 * ceil_nm1_3 + 1 : 2 * ceil_nm1_3;
    default:
      unsupported(FormulaFamily::Path, kind);
  }
}

long cycle_value(ParameterKind kind, long n) {
  if (n < 3) throw std::invalid_argument("cycle formulas need n >= 3");
  switch (kind) {
    case ParameterKind::Spn:
      return n / 2;
    case ParameterKind::Ipn:
    case ParameterKind::Epn:
      return 2 * (n / 3);
    case ParameterKind::Eipn:
      return n % 4 == 3 ? n - 1 : 4 * ((n + 1) / 4);  // ceil((n-2)/4) = (n+1)/4
    case ParameterKind::Espn:
      return n % 3 == 0 ? n : n - 1;
    case ParameterKind::Ispn:
      return n % 3 == 2 ? 2 * (n / 3) + 1 : 2 * (n / 3);
    case ParameterKind::Eispn:
      return n == 5 ? 4 : n;
    default:
      unsupported(FormulaFamily::Cycle, kind);
  }
}

long complete_bipartite_value(ParameterKind kind, long p, long q) {
  if (p < 1 || p > q) {
    throw std::invalid_argument("complete bipartite formulas need 1 <= p <= q");
  }
  switch (kind) {
    case ParameterKind::Spn:
      return q;
    case ParameterKind::Ipn:
    case ParameterKind::Ispn:
      // K_{1,1} is a single edge whose two ends are internal private
      // neighbors of each other
      return (p == 1 && q == 1) ? 2 : q;
    case ParameterKind::Epn:
      return p == 1 ? q : p + q - 2;
    case ParameterKind::Eipn:
    case ParameterKind::Eispn:
      return p + q;
    case ParameterKind::Espn:
      // a single vertex of the small side scores 1 self + q externals
      return p == 1 ? q + 1 : std::max(1 + q, p + q - 2);
    default:
      unsupported(FormulaFamily::CompleteBipartite, kind);
  }
}

}  // namespace

long formula_value(FormulaFamily family, ParameterKind kind, long p1, long p2) {
  switch (family) {
    case FormulaFamily::Path:
      return path_value(kind, p1);
    case FormulaFamily::Cycle:
      return cycle_value(kind, p1);
    case FormulaFamily::CompleteBipartite:
      return complete_bipartite_value(kind, p1, p2);
    case FormulaFamily::PrismEspn:
      if (kind != ParameterKind::Espn) unsupported(family, kind);
      if (p1 < 2) throw std::invalid_argument("prism formula needs n >= 2");
      return p1 % 2 == 1 ? 2 * p1 : 2 * p1 - 1;
  }
  throw std::logic_error("unreachable");
}

std::string formula_family_name(FormulaFamily family) {
  switch (family) {
    case FormulaFamily::Path:
      return "path";
    case FormulaFamily::Cycle:
      return "cycle";
    case FormulaFamily::CompleteBipartite:
      return "complete_bipartite";
    case FormulaFamily::PrismEspn:
      return "prism_espn";
  }
  return "?";
}

FormulaCheckReport check_formulas_against_oracle(int max_n, int prism_max_n,
                                                 const SolveOptions& opts) {
  FormulaCheckReport report;
  auto compare = [&](FormulaFamily family, ParameterKind kind, long p1, long p2,
                     long solver_value) {
    ++report.checks;
    const long f = formula_value(family, kind, p1, p2);
    if (f != solver_value) {
      report.mismatches.push_back({family, kind, p1, p2, f, solver_value});
    }
  };

  for (int n = 2; n <= max_n; ++n) {
    const auto vals = solve_pn_all(path_graph(n), opts);
    for (int i = 0; i < kNumPnKinds; ++i) {
      compare(FormulaFamily::Path, kPnKinds[i], n, 0, vals[i].value);
    }
  }
  for (int n = 3; n <= max_n; ++n) {
    const auto vals = solve_pn_all(cycle_graph(n), opts);
    for (int i = 0; i < kNumPnKinds; ++i) {
      compare(FormulaFamily::Cycle, kPnKinds[i], n, 0, vals[i].value);
    }
  }
  for (int p = 1; p <= max_n / 2; ++p) {
    for (int q = p; p + q <= max_n; ++q) {
      const auto vals = solve_pn_all(complete_bipartite(p, q), opts);
      for (int i = 0; i < kNumPnKinds; ++i) {
        compare(FormulaFamily::CompleteBipartite, kPnKinds[i], p, q, vals[i].value);
      }
    }
  }
  for (int n = 2; n <= prism_max_n; ++n) {
    // 2n vertices; route through enumeration like the other rows
    const auto r = solve_pn(grid_graph(n, 2), ParameterKind::Espn, opts);
    compare(FormulaFamily::PrismEspn, ParameterKind::Espn, n, 0, r.value);
  }
  return report;
}

EspnTreeFamilyValue espn_tree_family_value(int k) {
  EspnTreeFamilyValue out;
  out.graph = espn_tree(k);  // throws for k < 2 or 5k beyond the width
  out.espn = solve_pn_tree(out.graph, ParameterKind::Espn).value;
  const long g = std::gcd(static_cast<long>(out.espn),
                          static_cast<long>(out.graph.order()));
  out.ratio_num = out.espn / g;
  out.ratio_den = out.graph.order() / g;
  out.matches_four_fifths = out.ratio_num == 4 && out.ratio_den == 5;
  return out;
}

}  // namespace pnmax
