#include "pnmax/grid_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pnmax {

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

inline int capped(int c) { return c > 2 ? 2 : c; }

// Profiles are indexed mask * 3^rows + base-3 packed counts.
struct ProfileCodec {
  int rows;
  int pow3;

  int encode_counts(const int* cnt) const {
    int code = 0;
    for (int r = rows - 1; r >= 0; --r) code = code * 3 + cnt[r];
    return code;
  }
  void decode_counts(int code, int* cnt) const {
    for (int r = 0; r < rows; ++r) {
      cnt[r] = code % 3;
      code /= 3;
    }
  }
};

// count of member neighbors of row r inside a column pattern
inline int vertical(int mask, int r, int rows) {
  int c = 0;
  if (r > 0) c += (mask >> (r - 1)) & 1;
  if (r + 1 < rows) c += (mask >> (r + 1)) & 1;
  return c;
}

}  // namespace

SolveResult solve_pn_grid(int cols, int rows, ParameterKind kind, bool force_witness) {
  if (rows < 1 || rows > kGridMaxRows) {
    throw std::invalid_argument("grid solver supports 1..6 rows, got " +
                                std::to_string(rows));
  }
  if (cols < 1) throw std::invalid_argument("grid solver needs at least one column");
  if (force_witness &&
      static_cast<long long>(cols) * rows > VertexSet::kMaxVertices) {
    throw std::invalid_argument("witness reconstruction is limited to 128 vertices");
  }
  const PnMask pmask = pn_mask(kind);
  const int contrib[2][3] = {{0, pmask.external ? 1 : 0, 0},
                             {pmask.self ? 1 : 0, pmask.internal ? 1 : 0, 0}};

  const int nmask = 1 << rows;
  int pow3 = 1;
  for (int r = 0; r < rows; ++r) pow3 *= 3;
  const int nstates = nmask * pow3;
  const ProfileCodec codec{rows, pow3};

  const bool with_witness =
      force_witness || static_cast<long long>(cols) * rows <= 64;

  std::vector<int> dp(nstates, kNegInf), next(nstates);
  std::vector<std::vector<std::int32_t>> back;
  if (with_witness) back.assign(cols, std::vector<std::int32_t>(nstates, -1));

  // seed column 0: counts are the vertical neighbors only
  for (int mask = 0; mask < nmask; ++mask) {
    int cnt[kGridMaxRows];
    for (int r = 0; r < rows; ++r) cnt[r] = capped(vertical(mask, r, rows));
    dp[mask * pow3 + codec.encode_counts(cnt)] = 0;
  }

  std::uint64_t relaxations = 0;
  for (int col = 0; col + 1 < cols; ++col) {
    std::fill(next.begin(), next.end(), kNegInf);
    for (int s = 0; s < nstates; ++s) {
      if (dp[s] == kNegInf) continue;
      const int mask = s / pow3;
      int cnt[kGridMaxRows];
      codec.decode_counts(s % pow3, cnt);
      for (int nm = 0; nm < nmask; ++nm) {
        int score = dp[s];
        for (int r = 0; r < rows; ++r) {
          const int total = capped(cnt[r] + ((nm >> r) & 1));
          score += contrib[(mask >> r) & 1][total];
        }
        int ncnt[kGridMaxRows];
        for (int r = 0; r < rows; ++r) {
          ncnt[r] = capped(((mask >> r) & 1) + vertical(nm, r, rows));
        }
        const int ns = nm * pow3 + codec.encode_counts(ncnt);
        ++relaxations;
        if (score > next[ns]) {
          next[ns] = score;
          if (with_witness) back[col + 1][ns] = static_cast<std::int32_t>(s);
        }
      }
    }
    dp.swap(next);
  }

  // finalize the last column with no right neighbor
  int best = kNegInf, best_state = -1;
  for (int s = 0; s < nstates; ++s) {
    if (dp[s] == kNegInf) continue;
    const int mask = s / pow3;
    int cnt[kGridMaxRows];
    codec.decode_counts(s % pow3, cnt);
    int score = dp[s];
    for (int r = 0; r < rows; ++r) score += contrib[(mask >> r) & 1][cnt[r]];
    if (score > best) {
      best = score;
      best_state = s;
    }
  }

  SolveResult res;
  res.value = best;
  res.method = SolveMethod::GridDp;
  res.explored = relaxations;
  if (with_witness) {
    VertexSet witness;
    int s = best_state;
    for (int col = cols - 1; col >= 0; --col) {
      const int mask = s / pow3;
      for (int r = 0; r < rows; ++r) {
        if ((mask >> r) & 1) witness.set(col * rows + r);
      }
      if (col > 0) s = back[col][s];
    }
    res.witness = witness;
  } else {
    res.witness_available = false;
  }
  return res;
}

}  // namespace pnmax
