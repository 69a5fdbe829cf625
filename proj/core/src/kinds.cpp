#include "pnmax/kinds.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace pnmax {

namespace {

constexpr std::pair<ParameterKind, const char*> kNames[] = {
    {ParameterKind::Spn, "SPN"},
    {ParameterKind::Ipn, "IPN"},
    {ParameterKind::Epn, "EPN"},
    {ParameterKind::Espn, "ESPN"},
    {ParameterKind::Eipn, "EIPN"},
    {ParameterKind::Ispn, "ISPN"},
    {ParameterKind::Eispn, "EISPN"},
    {ParameterKind::Alpha, "ALPHA"},
    {ParameterKind::AlphaStar, "ALPHA_STAR"},
    {ParameterKind::Oir, "OIR"},
    {ParameterKind::Ir, "IR"},
    {ParameterKind::Ooir, "OOIR"},
    {ParameterKind::Alpha1, "ALPHA1"},
    {ParameterKind::Coir, "COIR"},
    {ParameterKind::Gamma, "GAMMA"},
    {ParameterKind::UpperGamma, "UPPER_GAMMA"},
    {ParameterKind::GammaP, "GAMMA_P"},
    {ParameterKind::UpperGammaP, "UPPER_GAMMA_P"},
    {ParameterKind::GammaTp, "GAMMA_TP"},
    {ParameterKind::UpperGammaTp, "UPPER_GAMMA_TP"},
    {ParameterKind::GammaPvt, "GAMMA_PVT"},
    {ParameterKind::UpperGammaPvt, "UPPER_GAMMA_PVT"},
};

}  // namespace

PnMask pn_mask(ParameterKind k) {
  switch (k) {
    case ParameterKind::Spn:
      return {.self = true};
    case ParameterKind::Ipn:
      return {.internal = true};
    case ParameterKind::Epn:
      return {.external = true};
    case ParameterKind::Espn:
      return {.self = true, .external = true};
    case ParameterKind::Eipn:
      return {.internal = true, .external = true};
    case ParameterKind::Ispn:
      return {.self = true, .internal = true};
    case ParameterKind::Eispn:
      return {.self = true, .internal = true, .external = true};
    default:
      throw std::invalid_argument(kind_name(k) + " is not a PN-maximization kind");
  }
}

std::string kind_name(ParameterKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  throw std::logic_error("unknown ParameterKind");
}

ParameterKind parse_kind(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& [kind, n] : kNames) {
    if (up == n) return kind;
  }
  throw std::invalid_argument("unknown parameter kind '" + name + "'");
}

}  // namespace pnmax
