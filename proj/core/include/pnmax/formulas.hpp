#pragma once

#include <string>
#include <vector>

#include "pnmax/kinds.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

enum class FormulaFamily { Path, Cycle, CompleteBipartite, PrismEspn };

// Closed-form value of a PN-maximization parameter on a named family.
// Paths need n >= 2, cycles n >= 3, complete bipartite 1 <= p <= q, and
// prism_espn (ESPN of P_n box P_2) n >= 2. SPN routes through the
// independence-number formulas. Throws for unsupported (family, kind)
// pairs or out-of-range parameters.
long formula_value(FormulaFamily family, ParameterKind kind, long p1, long p2 = 0);

struct FormulaMismatch {
  FormulaFamily family;
  ParameterKind kind;
  long p1 = 0;
  long p2 = 0;
  long formula = 0;
  long solver = 0;
};

struct FormulaCheckReport {
  int checks = 0;
  std::vector<FormulaMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Compares every closed form against the subset-enumeration solver:
// paths n in [2, max_n], cycles n in [3, max_n], K_{p,q} with p+q <=
// min(max_n, 12)-ish cap from max_n, prisms n in [2, prism_max_n].
FormulaCheckReport check_formulas_against_oracle(int max_n, int prism_max_n = 0,
                                                 const SolveOptions& opts = {});

std::string formula_family_name(FormulaFamily family);

// The tree family realizing ESPN = (4/5) n: a spine path of k vertices,
// each carrying two leaves and a pendant two-vertex chain. espn is
// computed by the tree DP; ratio_num/ratio_den is espn over the order in
// lowest terms (4/5 whenever the family value is attained).
struct EspnTreeFamilyValue {
  Graph graph{0};
  int espn = 0;
  long ratio_num = 0;
  long ratio_den = 1;
  bool matches_four_fifths = false;
};

EspnTreeFamilyValue espn_tree_family_value(int k);

}  // namespace pnmax
