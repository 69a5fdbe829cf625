#pragma once

#include <string>
#include <vector>

namespace pnmax {

// Bounded evidence sweeps for the open grid conjectures:
//   C1:  EIPN(P_2 box P_m) == 2m
//   C2a: EISPN(P_3 box P_2k) == 6k
//   C2b: EISPN(P_4 box P_m) == 4m
enum class ConjectureId { C1, C2a, C2b };

struct ConjectureInstance {
  long param = 0;      // m (C1, C2b) or k (C2a)
  long computed = 0;   // grid DP value
  long conjectured = 0;
  bool agree = false;
};

struct ConjectureReport {
  ConjectureId id;
  std::vector<ConjectureInstance> instances;
  bool all_agree = true;
  std::string text;  // deterministic
};

ConjectureReport run_conjecture(ConjectureId id, long lo, long hi);

std::string conjecture_name(ConjectureId id);
ConjectureId parse_conjecture(const std::string& name);

}  // namespace pnmax
