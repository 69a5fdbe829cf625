#include "pnmax/pn.hpp"

#include <stdexcept>

namespace pnmax {

VertexPnStatus vertex_status(const Graph& g, const VertexSet& u, int v) {
  const int c = (g.neighbors(v) & u).count();
  if (u.test(v)) {
    if (c == 0) return VertexPnStatus::SelfPrivate;
    if (c == 1) return VertexPnStatus::InternalPrivate;
    return VertexPnStatus::InsideUnclassified;
  }
  if (c == 1) return VertexPnStatus::ExternalPrivate;
  return VertexPnStatus::OutsideUnclassified;
}

PnTriple pn_triple(const Graph& g, const VertexSet& u) {
  PnTriple t;
  for (int v = 0; v < g.order(); ++v) {
    switch (vertex_status(g, u, v)) {
      case VertexPnStatus::SelfPrivate:
        ++t.self_count;
        break;
      case VertexPnStatus::InternalPrivate:
        ++t.internal_count;
        break;
      case VertexPnStatus::ExternalPrivate:
        ++t.external_count;
        break;
      default:
        break;
    }
  }
  return t;
}

int pn_score(const PnTriple& t, ParameterKind kind) {
  const PnMask m = pn_mask(kind);
  return (m.self ? t.self_count : 0) + (m.internal ? t.internal_count : 0) +
         (m.external ? t.external_count : 0);
}

int pn_score(const Graph& g, const VertexSet& u, ParameterKind kind) {
  return pn_score(pn_triple(g, u), kind);
}

PnWitness has_private_neighbor(const Graph& g, const VertexSet& u, int v,
                               PnFlavor flavor) {
  if (!u.test(v)) {
    throw std::invalid_argument("has_private_neighbor: vertex " + std::to_string(v) +
                                " is not in the set");
  }
  if (flavor == PnFlavor::Self) {
    if ((g.neighbors(v) & u).empty()) return {true, v};
    return {};
  }
  // A private neighbor of v is necessarily adjacent to v, so scanning
  // N(v) in ascending order yields the least witness.
  const VertexSet v_only = VertexSet::single(v);
  for (int w : g.neighbors(v).vertices()) {
    const bool inside = u.test(w);
    if ((flavor == PnFlavor::Internal) != inside) continue;
    if ((g.neighbors(w) & u) == v_only) return {true, w};
  }
  return {};
}

namespace {

bool every_member_has(const Graph& g, const VertexSet& u, bool ext, bool internal,
                      bool self) {
  for (int v : u.vertices()) {
    if (self && has_private_neighbor(g, u, v, PnFlavor::Self).found) continue;
    if (ext && has_private_neighbor(g, u, v, PnFlavor::External).found) continue;
    if (internal && has_private_neighbor(g, u, v, PnFlavor::Internal).found) continue;
    return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& u) {
  for (int w = 0; w < g.order(); ++w) {
    if (u.test(w)) continue;
    if ((g.neighbors(w) & u).empty()) return false;
  }
  return true;
}

bool outside_exactly_one(const Graph& g, const VertexSet& u) {
  for (int w = 0; w < g.order(); ++w) {
    if (u.test(w)) continue;
    if ((g.neighbors(w) & u).count() != 1) return false;
  }
  return true;
}

bool all_exactly_one(const Graph& g, const VertexSet& u) {
  for (int w = 0; w < g.order(); ++w) {
    if ((g.neighbors(w) & u).count() != 1) return false;
  }
  return true;
}

bool is_private_dominating(const Graph& g, const VertexSet& u) {
  return is_dominating(g, u) && every_member_has(g, u, true, false, false);
}

template <typename Pred>
bool is_minimal(const Graph& g, const VertexSet& u, Pred pred) {
  for (int v : u.vertices()) {
    VertexSet smaller = u;
    smaller.reset(v);
    if (pred(g, smaller)) return false;
  }
  return true;
}

}  // namespace

bool set_class_predicate(const Graph& g, const VertexSet& u, ParameterKind kind) {
  switch (kind) {
    case ParameterKind::Alpha:
      return every_member_has(g, u, false, false, true);
    case ParameterKind::AlphaStar:
      return every_member_has(g, u, false, true, false);
    case ParameterKind::Oir:
      return every_member_has(g, u, true, false, false);
    case ParameterKind::Ir:
      return every_member_has(g, u, true, false, true);
    case ParameterKind::Ooir:
      return every_member_has(g, u, true, true, false);
    case ParameterKind::Alpha1: {
      for (int v : u.vertices()) {
        if ((g.neighbors(v) & u).count() >= 2) return false;
      }
      return true;
    }
    case ParameterKind::Coir:
      return every_member_has(g, u, true, true, true);
    case ParameterKind::Gamma:
      return is_dominating(g, u);
    case ParameterKind::UpperGamma:
      return is_dominating(g, u) && is_minimal(g, u, is_dominating);
    case ParameterKind::GammaP:
    case ParameterKind::UpperGammaP:
      return outside_exactly_one(g, u);
    case ParameterKind::GammaTp:
    case ParameterKind::UpperGammaTp:
      return all_exactly_one(g, u);
    case ParameterKind::GammaPvt:
      return is_private_dominating(g, u);
    case ParameterKind::UpperGammaPvt:
      return is_private_dominating(g, u) && is_minimal(g, u, is_private_dominating);
    default:
      throw std::invalid_argument(kind_name(kind) +
                                  " is a PN-maximization kind, not a set class");
  }
}

}  // namespace pnmax
