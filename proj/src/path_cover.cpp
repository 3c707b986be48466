#include "eigmult/path_cover.hpp"

#include <algorithm>
#include <array>

#include "eigmult/errors.hpp"
#include "eigmult/structure.hpp"

namespace eigmult {

namespace {

// Depth-first preorder of the tree containing `root` inside `within`, with parents.
// Returns the number of vertices visited.
int preorder(const Graph& f, Mask within, int root, std::array<int, kMaxVertices>& order,
             std::array<int, kMaxVertices>& parent) {
  int len = 0;
  std::array<int, kMaxVertices> stack{};
  int top = 0;
  stack[top++] = root;
  parent[root] = -1;
  Mask seen = bit(root);
  while (top) {
    const int v = stack[--top];
    order[len++] = v;
    // Push larger labels first so smaller children are visited first.
    Mask kids = f.neighbors(v) & within & ~seen;
    seen |= kids;
    while (kids) {
      const int c = kMaxVertices - 1 - std::countl_zero(kids);
      kids &= ~bit(c);
      parent[c] = v;
      stack[top++] = c;
    }
  }
  return len;
}

struct GreedyState {
  int paths = 0;
  Mask joined = 0;
};

GreedyState run_greedy(const Graph& f, Mask within) {
  GreedyState state;
  std::array<int, kMaxVertices> order{}, parent{};
  for (Mask rest = within; rest;) {
    const int len = preorder(f, within, lowest(rest), order, parent);
    Mask open = 0;  // vertices whose path is still extendable upward
    for (int i = len - 1; i >= 0; --i) {
      const int v = order[i];
      Mask open_children = 0;
      for (Mask m = f.neighbors(v) & within; m; m &= m - 1) {
        const int c = lowest(m);
        if (c != parent[v] && (open & bit(c))) open_children |= bit(c);
      }
      const int k = popcount(open_children);
      if (k == 0) {
        ++state.paths;
        open |= bit(v);
      } else if (k == 1) {
        open |= bit(v);
      } else {
        --state.paths;
        state.joined |= bit(v);
      }
      rest &= ~bit(v);
    }
  }
  return state;
}

}  // namespace

int path_cover_number(const Graph& f, Mask within) { return run_greedy(f, within).paths; }

Mask greedy_join_vertices(const Graph& f, Mask within) { return run_greedy(f, within).joined; }

PathCover min_path_cover(const Graph& f) {
  if (!is_forest(f, f.vertices())) throw PreconditionError("min_path_cover: graph is not a forest");

  const Mask all = f.vertices();
  std::vector<std::vector<int>> chain(f.order());  // open path ending at v, far end first
  PathCover cover;
  std::array<int, kMaxVertices> order{}, parent{};
  for (Mask rest = all; rest;) {
    const int len = preorder(f, all, lowest(rest), order, parent);
    Mask open = 0;
    for (int i = len - 1; i >= 0; --i) {
      const int v = order[i];
      std::vector<int> kids;  // ascending
      for (Mask m = f.neighbors(v); m; m &= m - 1) {
        const int c = lowest(m);
        if (c != parent[v] && (open & bit(c))) kids.push_back(c);
      }
      if (kids.empty()) {
        chain[v] = {v};
        open |= bit(v);
      } else if (kids.size() == 1) {
        chain[v] = std::move(chain[kids[0]]);
        chain[v].push_back(v);
        open |= bit(v);
      } else {
        // Join the two smallest; any further open children end where they are.
        std::vector<int> path = std::move(chain[kids[0]]);
        path.push_back(v);
        path.insert(path.end(), chain[kids[1]].rbegin(), chain[kids[1]].rend());
        cover.paths.push_back(std::move(path));
        for (std::size_t j = 2; j < kids.size(); ++j) cover.paths.push_back(std::move(chain[kids[j]]));
      }
      rest &= ~bit(v);
    }
    const int root = order[0];
    if (open & bit(root)) cover.paths.push_back(std::move(chain[root]));
  }

  for (auto& path : cover.paths) {
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  }
  std::sort(cover.paths.begin(), cover.paths.end());
  return cover;
}

int path_cover_bruteforce(const Graph& f, int cap) {
  const int n = f.order();
  if (n > cap) throw CapExceededError("path_cover_bruteforce", n, cap);
  if (!is_forest(f, f.vertices())) throw PreconditionError("path_cover_bruteforce: graph is not a forest");

  const std::vector<Edge> edges = f.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << m); ++chosen) {
    const int count = std::popcount(chosen);
    if (count <= best) continue;
    std::array<int, kMaxVertices> degree{};
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((chosen >> e) & 1)) continue;
      ok = ++degree[edges[e].u] <= 2 && ++degree[edges[e].v] <= 2;
    }
    if (ok) best = count;
  }
  return n - best;
}

int induced_path_cover_exact(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) throw CapExceededError("induced_path_cover_exact", n, cap);
  const std::size_t states = std::size_t{1} << n;

  std::vector<bool> induces_path(states, false);
  for (Mask s = 1; s < states; ++s) {
    induces_path[s] = is_linear_forest(g, s) && count_components(g, s) == 1;
  }

  std::vector<int> best(states, n + 1);
  best[0] = 0;
  for (Mask s = 1; s < states; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    // Every submask of `rest`, each joined with the lowest vertex of s.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (induces_path[part]) best[s] = std::min(best[s], 1 + best[s ^ part]);
      if (sub == 0) break;
    }
  }
  return best[states - 1];
}

}  // namespace eigmult
