#include "pnmax/conjectures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pnmax/grid_dp.hpp"

namespace pnmax {

std::string conjecture_name(ConjectureId id) {
  switch (id) {
    case ConjectureId::C1:
      return "C1";
    case ConjectureId::C2a:
      return "C2a";
    case ConjectureId::C2b:
      return "C2b";
  }
  return "?";
}

ConjectureId parse_conjecture(const std::string& name) {
  if (name == "C1" || name == "c1") return ConjectureId::C1;
  if (name == "C2a" || name == "c2a") return ConjectureId::C2a;
  if (name == "C2b" || name == "c2b") return ConjectureId::C2b;
  throw std::invalid_argument("unknown conjecture '" + name + "' (C1, C2a, C2b)");
}

ConjectureReport run_conjecture(ConjectureId id, long lo, long hi) {
  ConjectureReport rep;
  rep.id = id;
  std::ostringstream out;

  long first = lo;
  switch (id) {
    case ConjectureId::C1:
      first = std::max(lo, 2L);
      out << "conjecture C1: EIPN(P_2 box P_m) == 2m for m in [" << first << "," << hi
          << "]\n";
      break;
    case ConjectureId::C2a:
      first = std::max(lo, 1L);
      out << "conjecture C2a: EISPN(P_3 box P_2k) == 6k for k in [" << first << ","
          << hi << "]\n";
      break;
    case ConjectureId::C2b:
      first = std::max(lo, 2L);
      out << "conjecture C2b: EISPN(P_4 box P_m) == 4m for m in [" << first << "," << hi
          << "]\n";
      break;
  }

  for (long p = first; p <= hi; ++p) {
    ConjectureInstance inst;
    inst.param = p;
    switch (id) {
      case ConjectureId::C1:
        inst.computed = solve_pn_grid(static_cast<int>(p), 2, ParameterKind::Eipn).value;
        inst.conjectured = 2 * p;
        break;
      case ConjectureId::C2a:
        inst.computed =
            solve_pn_grid(static_cast<int>(2 * p), 3, ParameterKind::Eispn).value;
        inst.conjectured = 6 * p;
        break;
      case ConjectureId::C2b:
        inst.computed =
            solve_pn_grid(static_cast<int>(p), 4, ParameterKind::Eispn).value;
        inst.conjectured = 4 * p;
        break;
    }
    inst.agree = inst.computed == inst.conjectured;
    rep.all_agree = rep.all_agree && inst.agree;
    out << "  param=" << p << " computed=" << inst.computed
        << " conjectured=" << inst.conjectured
        << (inst.agree ? " agree" : " DISAGREE") << "\n";
    rep.instances.push_back(inst);
  }
  out << (rep.all_agree ? "  all instances agree" : "  COUNTEREXAMPLE FOUND") << "\n";
  rep.text = out.str();
  return rep;
}

}  // namespace pnmax
