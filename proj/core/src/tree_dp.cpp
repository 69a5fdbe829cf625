#include "pnmax/tree_dp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pnmax {

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

inline int capped(int c) { return c > 2 ? 2 : c; }

struct PerVertex {
  // dp[m][c]: best finalized total inside the subtree, the root of the
  // subtree itself not yet counted; m = membership, c = capped number of
  // member children.
  int dp[2][3];
  // choice made when this vertex was folded into its parent:
  // for parent membership mp and the parent's capped count after the fold,
  // the membership chosen for this vertex and the parent count before.
  signed char pick_m[2][3];
  signed char pick_cbefore[2][3];
  // best own-state count for (parent membership, own membership)
  signed char best_c[2][2];
};

}  // namespace

SolveResult solve_pn_tree(const Graph& t, ParameterKind kind) {
  if (!is_tree(t)) {
    throw std::invalid_argument("solve_pn_tree requires a connected acyclic graph");
  }
  const PnMask mask = pn_mask(kind);
  // contribution of a vertex by (membership, capped U-neighbor count)
  const int contrib[2][3] = {{0, mask.external ? 1 : 0, 0},
                             {mask.self ? 1 : 0, mask.internal ? 1 : 0, 0}};

  const int n = t.order();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  {
    std::vector<int> stack = {0};
    VertexSet seen = VertexSet::single(0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : t.neighbors(v).vertices()) {
        if (!seen.test(w)) {
          seen.set(w);
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v) {
    if (parent[v] >= 0) children[parent[v]].push_back(v);
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  std::vector<PerVertex> st(n);
  for (auto& s : st) {
    for (int m = 0; m < 2; ++m) {
      s.dp[m][0] = 0;
      s.dp[m][1] = s.dp[m][2] = kNegInf;
    }
  }

  // children fold bottom-up (reverse DFS discovery order)
  for (int i = n - 1; i >= 0; --i) {
    const int v = order[i];
    for (int u : children[v]) {
      // best over the child's own count, for each (mp, mu)
      int best_val[2][2];
      for (int mp = 0; mp < 2; ++mp) {
        for (int mu = 0; mu < 2; ++mu) {
          int bv = kNegInf;
          int bc = 0;
          for (int cu = 0; cu < 3; ++cu) {
            if (st[u].dp[mu][cu] == kNegInf) continue;
            const int val = st[u].dp[mu][cu] + contrib[mu][capped(cu + mp)];
            if (val > bv) {
              bv = val;
              bc = cu;
            }
          }
          best_val[mp][mu] = bv;
          st[u].best_c[mp][mu] = static_cast<signed char>(bc);
        }
      }
      for (int mv = 0; mv < 2; ++mv) {
        int ndp[3] = {kNegInf, kNegInf, kNegInf};
        for (int c = 0; c < 3; ++c) {
          if (st[v].dp[mv][c] == kNegInf) continue;
          for (int mu = 0; mu < 2; ++mu) {
            const int c2 = capped(c + mu);
            const int val = st[v].dp[mv][c] + best_val[mv][mu];
            if (val > ndp[c2]) {
              ndp[c2] = val;
              st[u].pick_m[mv][c2] = static_cast<signed char>(mu);
              st[u].pick_cbefore[mv][c2] = static_cast<signed char>(c);
            }
          }
        }
        for (int c = 0; c < 3; ++c) st[v].dp[mv][c] = ndp[c];
      }
    }
  }

  // root finalizes against no parent
  int best = kNegInf, root_m = 0, root_c = 0;
  for (int m = 0; m < 2; ++m) {
    for (int c = 0; c < 3; ++c) {
      if (st[0].dp[m][c] == kNegInf) continue;
      const int val = st[0].dp[m][c] + contrib[m][c];
      if (val > best) {
        best = val;
        root_m = m;
        root_c = c;
      }
    }
  }

  // walk the fold choices back down, children in reverse order
  VertexSet witness;
  std::vector<std::array<int, 3>> stack;  // (vertex, membership, count)
  stack.push_back({0, root_m, root_c});
  while (!stack.empty()) {
    auto [v, mv, cv] = stack.back();
    stack.pop_back();
    if (mv) witness.set(v);
    int c = cv;
    const auto& kids = children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      const int u = *it;
      const int mu = st[u].pick_m[mv][c];
      const int cb = st[u].pick_cbefore[mv][c];
      stack.push_back({u, mu, st[u].best_c[mv][mu]});
      c = cb;
    }
  }

  SolveResult res;
  res.value = best;
  res.witness = witness;
  res.explored = static_cast<std::uint64_t>(n);
  res.method = SolveMethod::TreeDp;
  return res;
}

TreeBoundReport verify_tree_lower_bound(const Graph& t) {
  if (!is_tree(t) || t.order() < 2) {
    throw std::invalid_argument("verify_tree_lower_bound requires a tree of order >= 2");
  }
  TreeBoundReport r;
  r.order = t.order();
  r.ipn = solve_pn_tree(t, ParameterKind::Ipn).value;
  r.bound = (t.order() + 1) / 2;
  r.holds = r.ipn >= r.bound;
  r.tight = 2 * r.ipn == t.order();
  return r;
}

}  // namespace pnmax
