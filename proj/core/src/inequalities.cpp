#include "pnmax/inequalities.hpp"

namespace pnmax {

namespace {

void add(InequalityReport& rep, const std::string& name, long lhs, long rhs,
         bool is_equality = false) {
  Relation r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = is_equality ? lhs == rhs : lhs <= rhs;
  r.equal = lhs == rhs;
  rep.relations.push_back(r);
  rep.all_hold = rep.all_hold && r.holds;
  if (r.equal) ++rep.equalities;
}

}  // namespace

InequalityReport verify_inequality_report(const Graph& g, const SolveOptions& opts) {
  InequalityReport rep;
  rep.order = g.order();

  const auto pn = solve_pn_all(g, opts);
  const auto cls = solve_set_class_all(g, opts);
  for (int i = 0; i < kNumPnKinds; ++i) rep.pn[i] = pn[i].value;
  for (int i = 0; i < kNumSetClassKinds; ++i) rep.set_class[i] = cls[i].value;

  const long spn = pn[0].value, ipn = pn[1].value, epn = pn[2].value,
             espn = pn[3].value, eipn = pn[4].value, ispn = pn[5].value,
             eispn = pn[6].value;
  const long alpha = cls[0].value, alpha_star = cls[1].value, oir = cls[2].value,
             ir = cls[3].value, ooir = cls[4].value, alpha1 = cls[5].value,
             coir = cls[6].value;

  // chains between the seven maxima
  add(rep, "SPN<=ESPN", spn, espn);
  add(rep, "ESPN<=EISPN", espn, eispn);
  add(rep, "SPN<=ISPN", spn, ispn);
  add(rep, "ISPN<=EISPN", ispn, eispn);
  add(rep, "IPN<=ISPN", ipn, ispn);
  add(rep, "IPN<=EIPN", ipn, eipn);
  add(rep, "EIPN<=EISPN", eipn, eispn);
  add(rep, "EPN<=ESPN", epn, espn);
  add(rep, "EPN<=EIPN", epn, eipn);

  // set-class lower bounds
  add(rep, "ALPHA==SPN", alpha, spn, /*is_equality=*/true);
  add(rep, "2*ALPHA_STAR<=IPN", 2 * alpha_star, ipn);
  add(rep, "OIR<=EPN", oir, epn);
  add(rep, "IR<=ESPN", ir, espn);
  add(rep, "OOIR<=EIPN", ooir, eipn);
  add(rep, "ALPHA1<=ISPN", alpha1, ispn);
  add(rep, "COIR<=EISPN", coir, eispn);

  // perfect domination
  const SolveResult gp = solve_set_class(g, ParameterKind::GammaP, opts);
  add(rep, "n-GAMMA_P<=EPN", g.order() - gp.value, epn);
  const SolveResult tp = solve_set_class(g, ParameterKind::GammaTp, opts);
  if (tp.feasible) {
    add(rep, "GAMMA_TP exists => EIPN==n", eipn, g.order(), /*is_equality=*/true);
  }

  // private domination, isolate-free only
  if (g.order() > 0 && !g.has_isolated_vertex()) {
    const SolveResult gamma = solve_set_class(g, ParameterKind::Gamma, opts);
    const SolveResult pvt = solve_set_class(g, ParameterKind::GammaPvt, opts);
    const SolveResult upvt = solve_set_class(g, ParameterKind::UpperGammaPvt, opts);
    add(rep, "GAMMA==GAMMA_PVT", gamma.value, pvt.value, /*is_equality=*/true);
    add(rep, "GAMMA_PVT<=UPPER_GAMMA_PVT", pvt.value, upvt.value);
    add(rep, "UPPER_GAMMA_PVT<=EPN", upvt.value, epn);
  }

  return rep;
}

}  // namespace pnmax
