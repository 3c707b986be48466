#pragma once

#include <array>

#include "eigmult/graph.hpp"

namespace eigmult {

// Visits the subsets of `pool` with at most `max_size` members, by increasing size and
// lexicographically within a size. `visit(Mask subset, int size)` returns false to stop
// the whole enumeration, true to continue. Returns false iff stopped early.
template <typename Visit>
bool for_each_subset_by_size(Mask pool, int max_size, Visit&& visit) {
  std::array<int, kMaxVertices> members{};
  int n = 0;
  for (Mask m = pool; m; m &= m - 1) members[n++] = lowest(m);
  if (max_size > n) max_size = n;

  std::array<int, kMaxVertices> idx{};
  for (int k = 0; k <= max_size; ++k) {
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask s = 0;
      for (int i = 0; i < k; ++i) s |= bit(members[idx[i]]);
      if (!visit(s, k)) return false;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace eigmult
