#pragma once

#include <string>

namespace pnmax {

// Every invariant the solvers can compute. The first seven maximize a sum
// of private-neighbor counts over all vertex subsets; the next seven are
// the maximum cardinality of a set whose members all have the indicated
// kind of private neighbor; the rest are the domination family.
enum class ParameterKind {
  // private-neighbor maximization
  Spn,
  Ipn,
  Epn,
  Espn,
  Eipn,
  Ispn,
  Eispn,
  // irredundance-type set classes
  Alpha,
  AlphaStar,
  Oir,
  Ir,
  Ooir,
  Alpha1,
  Coir,
  // domination family
  Gamma,
  UpperGamma,
  GammaP,
  UpperGammaP,
  GammaTp,
  UpperGammaTp,
  GammaPvt,
  UpperGammaPvt,
};

constexpr int kNumPnKinds = 7;
constexpr int kNumSetClassKinds = 7;

constexpr bool is_pn_kind(ParameterKind k) {
  return k >= ParameterKind::Spn && k <= ParameterKind::Eispn;
}

constexpr bool is_set_class_kind(ParameterKind k) {
  return k >= ParameterKind::Alpha && k <= ParameterKind::Coir;
}

constexpr bool is_domination_kind(ParameterKind k) {
  return k >= ParameterKind::Gamma && k <= ParameterKind::UpperGammaPvt;
}

// Lower (minimum-cardinality) members of the domination family.
constexpr bool is_minimized(ParameterKind k) {
  return k == ParameterKind::Gamma || k == ParameterKind::GammaP ||
         k == ParameterKind::GammaTp || k == ParameterKind::GammaPvt;
}

// Which of the (self, internal, external) counts a PN-maximization kind sums.
struct PnMask {
  bool self = false;
  bool internal = false;
  bool external = false;
};

PnMask pn_mask(ParameterKind k);

std::string kind_name(ParameterKind k);
ParameterKind parse_kind(const std::string& name);

// PN-max kinds in enum order: SPN, IPN, EPN, ESPN, EIPN, ISPN, EISPN.
constexpr ParameterKind kPnKinds[kNumPnKinds] = {
    ParameterKind::Spn,  ParameterKind::Ipn,  ParameterKind::Epn,
    ParameterKind::Espn, ParameterKind::Eipn, ParameterKind::Ispn,
    ParameterKind::Eispn,
};

constexpr ParameterKind kSetClassKinds[kNumSetClassKinds] = {
    ParameterKind::Alpha, ParameterKind::AlphaStar, ParameterKind::Oir,
    ParameterKind::Ir,    ParameterKind::Ooir,      ParameterKind::Alpha1,
    ParameterKind::Coir,
};

}  // namespace pnmax
