#include "pnmax/solver.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pnmax {

std::string method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Enumeration:
      return "enumeration";
    case SolveMethod::BranchAndBound:
      return "branch_and_bound";
    case SolveMethod::TreeDp:
      return "tree_dp";
    case SolveMethod::GridDp:
      return "grid_dp";
    case SolveMethod::Formula:
      return "formula";
  }
  return "?";
}

namespace {

using std::uint64_t;

void check_width(const Graph& g, const SolveOptions& opts) {
  if (g.order() > opts.max_width) {
    throw std::invalid_argument(
        "graph of order " + std::to_string(g.order()) +
        " exceeds the enumeration limit of " + std::to_string(opts.max_width) +
        "; use the tree or grid solver");
  }
  if (g.order() > 62) {
    throw std::invalid_argument("subset enumeration supports at most 62 vertices");
  }
}

std::vector<uint64_t> adjacency_words(const Graph& g) {
  std::vector<uint64_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.adjacency_word(v);
  return adj;
}

struct ScanCounts {
  int self = 0;
  int internal = 0;
  int external = 0;
};

inline ScanCounts scan_counts(const uint64_t* adj, int n, uint64_t u) {
  ScanCounts c;
  for (int v = 0; v < n; ++v) {
    const int k = std::popcount(adj[v] & u);
    const bool in = (u >> v) & 1;
    if (k == 0) {
      c.self += in;
    } else if (k == 1) {
      if (in) {
        ++c.internal;
      } else {
        ++c.external;
      }
    }
  }
  return c;
}

struct ScanFlags {
  ScanCounts counts;
  uint64_t ext_flag = 0;   // members owning an external private neighbor
  uint64_t int_flag = 0;   // members owning an internal private neighbor
  uint64_t self_flag = 0;  // members isolated in the induced subgraph
  uint64_t deg2_in = 0;    // members with two or more U-neighbors
  int outside_zero = 0;    // outside vertices with no U-neighbor
  int outside_multi = 0;   // outside vertices with two or more U-neighbors
};

inline ScanFlags scan_flags(const uint64_t* adj, int n, uint64_t u) {
  ScanFlags f;
  for (int w = 0; w < n; ++w) {
    const uint64_t hit = adj[w] & u;
    const int k = std::popcount(hit);
    const bool in = (u >> w) & 1;
    if (k == 1) {
      const int owner = std::countr_zero(hit);
      if (in) {
        ++f.counts.internal;
        f.int_flag |= uint64_t{1} << owner;
      } else {
        ++f.counts.external;
        f.ext_flag |= uint64_t{1} << owner;
      }
    } else if (k == 0) {
      if (in) {
        ++f.counts.self;
        f.self_flag |= uint64_t{1} << w;
      } else {
        ++f.outside_zero;
      }
    } else {
      if (in) {
        f.deg2_in |= uint64_t{1} << w;
      } else {
        ++f.outside_multi;
      }
    }
  }
  return f;
}

inline int masked_score(const ScanCounts& c, const PnMask& m) {
  return (m.self ? c.self : 0) + (m.internal ? c.internal : 0) +
         (m.external ? c.external : 0);
}

// Best candidate for a maximization over subsets; ties resolved toward
// the lexicographically least witness so the outcome is independent of
// shard count and thread scheduling.
struct Best {
  bool valid = false;
  int value = 0;
  uint64_t witness = 0;

  void offer_max(int v, uint64_t u) {
    if (!valid || v > value) {
      valid = true;
      value = v;
      witness = u;
    } else if (v == value &&
               VertexSet::lex_less(VertexSet::from_low_word(u),
                                   VertexSet::from_low_word(witness))) {
      witness = u;
    }
  }

  void offer_min(int v, uint64_t u) {
    if (!valid || v < value) {
      valid = true;
      value = v;
      witness = u;
    } else if (v == value &&
               VertexSet::lex_less(VertexSet::from_low_word(u),
                                   VertexSet::from_low_word(witness))) {
      witness = u;
    }
  }

  void merge_max(const Best& o) {
    if (o.valid) offer_max(o.value, o.witness);
  }
  void merge_min(const Best& o) {
    if (o.valid) offer_min(o.value, o.witness);
  }
};

struct ShardRange {
  uint64_t begin;
  uint64_t end;
};

std::vector<ShardRange> shard_ranges(int n, int shards) {
  const uint64_t total = uint64_t{1} << n;
  int s = shards < 1 ? 1 : shards;
  if (total < (uint64_t{1} << 14)) s = 1;  // not worth spawning threads
  std::vector<ShardRange> out;
  uint64_t base = total / s, rem = total % s;
  uint64_t at = 0;
  for (int i = 0; i < s; ++i) {
    uint64_t len = base + (static_cast<uint64_t>(i) < rem ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

template <typename PerShard>
void run_sharded(const std::vector<ShardRange>& ranges, PerShard fn) {
  if (ranges.size() == 1) {
    fn(0, ranges[0]);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] { fn(i, ranges[i]); });
  }
  for (auto& t : threads) t.join();
}

// ---- branch and bound -------------------------------------------------

// Depth-first over vertices n-1 down to 0 so that shard prefixes fix the
// high-order membership bits. A vertex's status is final once it and all
// of its neighbors are decided; the admissible bound adds one for every
// vertex not yet final. Pruning is strict (bound < best), which preserves
// both the optimum and the lexicographically-least witness.
struct BnbState {
  const uint64_t* adj;
  int n;
  int table[2][3];  // contribution by (membership, capped count)
  std::vector<int> cnt;
  std::vector<std::vector<int>> finalize_at;  // w finalized when min(N[w]) decided
  uint64_t u = 0;
  std::atomic<int>* global_best;
  Best best;
  uint64_t nodes = 0;

  void dfs(int next, int score, int finalized) {
    ++nodes;
    if (next < 0) {
      best.offer_max(score, u);
      int cur = global_best->load(std::memory_order_relaxed);
      while (score > cur && !global_best->compare_exchange_weak(
                                cur, score, std::memory_order_relaxed)) {
      }
      return;
    }
    const int bound = score + (n - finalized);
    if (bound < global_best->load(std::memory_order_relaxed)) return;
    for (int m = 0; m <= 1; ++m) {
      decide(next, m, score, finalized);
    }
  }

  void decide(int v, int m, int score, int finalized) {
    if (m) {
      u |= uint64_t{1} << v;
      for (uint64_t w = adj[v]; w; w &= w - 1) ++cnt[std::countr_zero(w)];
    }
    int add = 0;
    for (int w : finalize_at[v]) {
      const int in = (u >> w) & 1;
      add += table[in][cnt[w] > 2 ? 2 : cnt[w]];
    }
    dfs(v - 1, score + add, finalized + static_cast<int>(finalize_at[v].size()));
    if (m) {
      u &= ~(uint64_t{1} << v);
      for (uint64_t w = adj[v]; w; w &= w - 1) --cnt[std::countr_zero(w)];
    }
  }
};

SolveResult solve_pn_bnb(const Graph& g, ParameterKind kind, const SolveOptions& opts) {
  const int n = g.order();
  const auto adj = adjacency_words(g);
  const PnMask mask = pn_mask(kind);
  int table[2][3] = {{0, mask.external ? 1 : 0, 0},
                     {mask.self ? 1 : 0, mask.internal ? 1 : 0, 0}};

  std::vector<std::vector<int>> finalize_at(n == 0 ? 1 : n);
  for (int w = 0; w < n; ++w) {
    int low = w;
    if (!g.neighbors(w).empty()) {
      int m = g.neighbors(w).lowest();
      if (m < low) low = m;
    }
    finalize_at[low].push_back(w);
  }

  std::atomic<int> global_best{0};  // score 0 is always achievable (empty set)
  const int shards = opts.parallel_shards < 1 ? 1 : opts.parallel_shards;
  int prefix_bits = 0;
  while ((1 << prefix_bits) < shards && prefix_bits < n) ++prefix_bits;
  const int prefixes = 1 << prefix_bits;

  std::vector<Best> bests(prefixes);
  std::vector<uint64_t> node_counts(prefixes, 0);

  auto run_prefix = [&](int p) {
    BnbState st;
    st.adj = adj.data();
    st.n = n;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b) st.table[a][b] = table[a][b];
    st.cnt.assign(n == 0 ? 1 : n, 0);
    st.finalize_at = finalize_at;
    st.global_best = &global_best;
    // decide the top prefix_bits vertices according to p, then recurse
    struct Frame {
      int v;
      int m;
    };
    // apply prefix decisions iteratively, accumulating score/finalized
    int score = 0, finalized = 0;
    for (int i = 0; i < prefix_bits; ++i) {
      const int v = n - 1 - i;
      const int m = (p >> i) & 1;
      if (m) {
        st.u |= uint64_t{1} << v;
        for (uint64_t w = st.adj[v]; w; w &= w - 1) ++st.cnt[std::countr_zero(w)];
      }
      for (int w : st.finalize_at[v]) {
        const int in = (st.u >> w) & 1;
        score += st.table[in][st.cnt[w] > 2 ? 2 : st.cnt[w]];
        ++finalized;
      }
    }
    st.dfs(n - 1 - prefix_bits, score, finalized);
    bests[p] = st.best;
    node_counts[p] = st.nodes;
  };

  if (shards == 1) {
    for (int p = 0; p < prefixes; ++p) run_prefix(p);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < shards; ++t) {
      threads.emplace_back([&, t] {
        for (int p = t; p < prefixes; p += shards) run_prefix(p);
      });
    }
    for (auto& t : threads) t.join();
  }

  Best best;
  uint64_t nodes = 0;
  for (int p = 0; p < prefixes; ++p) {
    best.merge_max(bests[p]);
    nodes += node_counts[p];
  }
  SolveResult r;
  r.value = best.value;
  r.witness = VertexSet::from_low_word(best.witness);
  r.explored = nodes;
  r.method = SolveMethod::BranchAndBound;
  return r;
}

}  // namespace

SolveResult solve_pn(const Graph& g, ParameterKind kind, const SolveOptions& opts) {
  if (!is_pn_kind(kind)) {
    throw std::invalid_argument(kind_name(kind) + " is not a PN-maximization kind");
  }
  check_width(g, opts);
  if (opts.use_bounds) return solve_pn_bnb(g, kind, opts);

  const int n = g.order();
  const auto adj = adjacency_words(g);
  const PnMask mask = pn_mask(kind);
  const auto ranges = shard_ranges(n, opts.parallel_shards);
  std::vector<Best> bests(ranges.size());

  run_sharded(ranges, [&](std::size_t shard, ShardRange r) {
    Best local;
    for (uint64_t u = r.begin; u < r.end; ++u) {
      const ScanCounts c = scan_counts(adj.data(), n, u);
      local.offer_max(masked_score(c, mask), u);
    }
    bests[shard] = local;
  });

  Best best;
  for (const auto& b : bests) best.merge_max(b);
  SolveResult res;
  res.value = best.value;
  res.witness = VertexSet::from_low_word(best.witness);
  res.explored = uint64_t{1} << n;
  res.method = SolveMethod::Enumeration;
  return res;
}

std::array<SolveResult, kNumPnKinds> solve_pn_all(const Graph& g,
                                                  const SolveOptions& opts) {
  check_width(g, opts);
  const int n = g.order();
  const auto adj = adjacency_words(g);
  PnMask masks[kNumPnKinds];
  for (int i = 0; i < kNumPnKinds; ++i) masks[i] = pn_mask(kPnKinds[i]);

  const auto ranges = shard_ranges(n, opts.parallel_shards);
  std::vector<std::array<Best, kNumPnKinds>> bests(ranges.size());

  run_sharded(ranges, [&](std::size_t shard, ShardRange r) {
    std::array<Best, kNumPnKinds> local;
    for (uint64_t u = r.begin; u < r.end; ++u) {
      const ScanCounts c = scan_counts(adj.data(), n, u);
      for (int i = 0; i < kNumPnKinds; ++i) {
        local[i].offer_max(masked_score(c, masks[i]), u);
      }
    }
    bests[shard] = local;
  });

  std::array<SolveResult, kNumPnKinds> out;
  for (int i = 0; i < kNumPnKinds; ++i) {
    Best best;
    for (const auto& b : bests) best.merge_max(b[i]);
    out[i].value = best.value;
    out[i].witness = VertexSet::from_low_word(best.witness);
    out[i].explored = uint64_t{1} << n;
    out[i].method = SolveMethod::Enumeration;
  }
  return out;
}

namespace {

// Predicate evaluation from one scan; UPPER_GAMMA_PVT needs sub-scans for
// its minimality condition and is handled by the caller.
inline bool class_predicate_from_scan(const ScanFlags& f, uint64_t u,
                                      ParameterKind kind) {
  const bool dominating = f.outside_zero == 0;
  switch (kind) {
    case ParameterKind::Alpha:
      return (u & ~f.self_flag) == 0;
    case ParameterKind::AlphaStar:
      return (u & ~f.int_flag) == 0;
    case ParameterKind::Oir:
      return (u & ~f.ext_flag) == 0;
    case ParameterKind::Ir:
      return (u & ~(f.ext_flag | f.self_flag)) == 0;
    case ParameterKind::Ooir:
      return (u & ~(f.ext_flag | f.int_flag)) == 0;
    case ParameterKind::Alpha1:
      return f.deg2_in == 0;
    case ParameterKind::Coir:
      return (u & ~(f.ext_flag | f.int_flag | f.self_flag)) == 0;
    case ParameterKind::Gamma:
      return dominating;
    case ParameterKind::UpperGamma:
      // minimal dominating = dominating and every member keeps a closed
      // private neighbor, i.e. is a self PN or owns an external PN
      return dominating && (u & ~(f.ext_flag | f.self_flag)) == 0;
    case ParameterKind::GammaP:
    case ParameterKind::UpperGammaP:
      return f.outside_zero == 0 && f.outside_multi == 0;
    case ParameterKind::GammaTp:
    case ParameterKind::UpperGammaTp:
      return f.outside_zero == 0 && f.outside_multi == 0 && f.counts.self == 0 &&
             f.deg2_in == 0;
    case ParameterKind::GammaPvt:
      return dominating && (u & ~f.ext_flag) == 0;
    default:
      throw std::invalid_argument("not a set-class kind");
  }
}

inline bool pvt_qualifies(const uint64_t* adj, int n, uint64_t u) {
  const ScanFlags f = scan_flags(adj, n, u);
  return f.outside_zero == 0 && (u & ~f.ext_flag) == 0;
}

inline bool upper_pvt_qualifies(const uint64_t* adj, int n, uint64_t u) {
  if (!pvt_qualifies(adj, n, u)) return false;
  for (uint64_t rest = u; rest; rest &= rest - 1) {
    const uint64_t v = rest & (~rest + 1);
    if (pvt_qualifies(adj, n, u & ~v)) return false;
  }
  return true;
}

}  // namespace

SolveResult solve_set_class(const Graph& g, ParameterKind kind,
                            const SolveOptions& opts) {
  if (is_pn_kind(kind)) {
    throw std::invalid_argument(kind_name(kind) +
                                " is a PN-maximization kind; use solve_pn");
  }
  check_width(g, opts);
  const int n = g.order();
  const auto adj = adjacency_words(g);
  const bool minimize = is_minimized(kind);
  const uint64_t full = n == 0 ? 0 : (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);

  const auto ranges = shard_ranges(n, opts.parallel_shards);
  std::vector<Best> bests(ranges.size());
  std::vector<char> proper_seen(ranges.size(), 0);

  run_sharded(ranges, [&](std::size_t shard, ShardRange r) {
    Best local;
    bool proper = false;
    for (uint64_t u = r.begin; u < r.end; ++u) {
      bool ok;
      if (kind == ParameterKind::UpperGammaPvt) {
        ok = upper_pvt_qualifies(adj.data(), n, u);
      } else {
        const ScanFlags f = scan_flags(adj.data(), n, u);
        ok = class_predicate_from_scan(f, u, kind);
      }
      if (!ok) continue;
      if (u != full) proper = true;
      const int card = std::popcount(u);
      if (minimize) {
        local.offer_min(card, u);
      } else {
        local.offer_max(card, u);
      }
    }
    bests[shard] = local;
    proper_seen[shard] = proper ? 1 : 0;
  });

  Best best;
  bool proper = false;
  for (std::size_t i = 0; i < bests.size(); ++i) {
    if (minimize) {
      best.merge_min(bests[i]);
    } else {
      best.merge_max(bests[i]);
    }
    proper = proper || proper_seen[i];
  }

  SolveResult res;
  res.method = SolveMethod::Enumeration;
  res.explored = uint64_t{1} << n;
  if (!best.valid) {
    res.feasible = false;
    res.value = -1;
    res.witness_available = false;
    return res;
  }
  res.value = kind == ParameterKind::AlphaStar ? best.value / 2 : best.value;
  res.witness = VertexSet::from_low_word(best.witness);
  if (kind == ParameterKind::GammaP || kind == ParameterKind::UpperGammaP) {
    res.only_trivial = !proper && n > 0;
  }
  return res;
}

std::array<SolveResult, kNumSetClassKinds> solve_set_class_all(
    const Graph& g, const SolveOptions& opts) {
  check_width(g, opts);
  const int n = g.order();
  const auto adj = adjacency_words(g);
  const auto ranges = shard_ranges(n, opts.parallel_shards);
  std::vector<std::array<Best, kNumSetClassKinds>> bests(ranges.size());

  run_sharded(ranges, [&](std::size_t shard, ShardRange r) {
    std::array<Best, kNumSetClassKinds> local;
    for (uint64_t u = r.begin; u < r.end; ++u) {
      const ScanFlags f = scan_flags(adj.data(), n, u);
      const int card = std::popcount(u);
      for (int i = 0; i < kNumSetClassKinds; ++i) {
        if (class_predicate_from_scan(f, u, kSetClassKinds[i])) {
          local[i].offer_max(card, u);
        }
      }
    }
    bests[shard] = local;
  });

  std::array<SolveResult, kNumSetClassKinds> out;
  for (int i = 0; i < kNumSetClassKinds; ++i) {
    Best best;
    for (const auto& b : bests) best.merge_max(b[i]);
    out[i].value = kSetClassKinds[i] == ParameterKind::AlphaStar ? best.value / 2
                                                                 : best.value;
    out[i].witness = VertexSet::from_low_word(best.witness);
    out[i].explored = uint64_t{1} << n;
    out[i].method = SolveMethod::Enumeration;
  }
  return out;
}

ParameterKind reduction_target(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::Epn:
      return ParameterKind::Oir;
    case ParameterKind::Espn:
      return ParameterKind::Ir;
    case ParameterKind::Eipn:
      return ParameterKind::Ooir;
    case ParameterKind::Ispn:
      return ParameterKind::Alpha1;
    case ParameterKind::Eispn:
      return ParameterKind::Coir;
    default:
      throw std::invalid_argument("no reduction procedure for " + kind_name(kind));
  }
}

VertexSet reduce_to_class(const Graph& g, const VertexSet& a, ParameterKind kind) {
  reduction_target(kind);  // validates the kind
  VertexSet b = a;
  for (;;) {
    int victim = -1;
    for (int v : b.vertices()) {
      bool violates;
      switch (kind) {
        case ParameterKind::Epn:
          violates = !has_private_neighbor(g, b, v, PnFlavor::External).found;
          break;
        case ParameterKind::Espn:
          violates = !has_private_neighbor(g, b, v, PnFlavor::External).found &&
                     !has_private_neighbor(g, b, v, PnFlavor::Self).found;
          break;
        case ParameterKind::Eipn:
          violates = !has_private_neighbor(g, b, v, PnFlavor::External).found &&
                     !has_private_neighbor(g, b, v, PnFlavor::Internal).found;
          break;
        case ParameterKind::Ispn:
          violates = (g.neighbors(v) & b).count() >= 2;
          break;
        default:  // Eispn
          violates = !has_private_neighbor(g, b, v, PnFlavor::External).found &&
                     !has_private_neighbor(g, b, v, PnFlavor::Internal).found &&
                     !has_private_neighbor(g, b, v, PnFlavor::Self).found;
          break;
      }
      if (violates) {
        victim = v;
        break;
      }
    }
    if (victim < 0) return b;
    b.reset(victim);
  }
}

}  // namespace pnmax
