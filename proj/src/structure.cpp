#include "eigmult/structure.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "eigmult/errors.hpp"

namespace eigmult {

Mask component_of(const Graph& g, Mask within, int v) {
  Mask seen = bit(v);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.neighbors(lowest(m));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Mask> components(const Graph& g, Mask within) {
  std::vector<Mask> out;
  for (Mask rest = within; rest;) {
    const Mask c = component_of(g, within, lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

int count_components(const Graph& g, Mask within) {
  int k = 0;
  for (Mask rest = within; rest; ++k) rest &= ~component_of(g, within, lowest(rest));
  return k;
}

int cycle_rank(const Graph& g, Mask within) {
  return g.edges_within(within) - popcount(within) + count_components(g, within);
}

bool is_forest(const Graph& g, Mask within) { return cycle_rank(g, within) == 0; }

bool is_linear_forest(const Graph& g, Mask within) {
  for (Mask m = within; m; m &= m - 1) {
    if (popcount(g.neighbors(lowest(m)) & within) > 2) return false;
  }
  return is_forest(g, within);
}

Mask InducedSubgraph::lift(Mask local) const {
  Mask out = 0;
  for (Mask m = local; m; m &= m - 1) out |= bit(label_map[lowest(m)]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, Mask kept) {
  InducedSubgraph out;
  std::vector<int> local(g.order(), -1);
  for (Mask m = kept; m; m &= m - 1) {
    local[lowest(m)] = static_cast<int>(out.label_map.size());
    out.label_map.push_back(lowest(m));
  }
  std::vector<Mask> rows;
  rows.reserve(out.label_map.size());
  for (int v : out.label_map) {
    Mask row = 0;
    for (Mask m = g.neighbors(v) & kept; m; m &= m - 1) row |= bit(local[lowest(m)]);
    rows.push_back(row);
  }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(VertexSet(g.vertices()))) {
    throw DomainError("delete_vertices: " + to_string(removed) + " is not a subset of 0.." +
                      std::to_string(g.order() - 1));
  }
  return induced_subgraph(g, g.vertices() & ~removed.bits());
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::kPath:
      return "path";
    case ComponentKind::kTree:
      return "tree";
    case ComponentKind::kCyclic:
      return "cyclic";
  }
  return "?";
}

bool ForestDecomposition::is_forest() const {
  return std::none_of(kinds.begin(), kinds.end(), [](ComponentKind k) { return k == ComponentKind::kCyclic; });
}

bool ForestDecomposition::is_linear_forest() const {
  return std::all_of(kinds.begin(), kinds.end(), [](ComponentKind k) { return k == ComponentKind::kPath; });
}

int ForestDecomposition::path_count() const {
  return static_cast<int>(std::count(kinds.begin(), kinds.end(), ComponentKind::kPath));
}

ForestDecomposition classify(const Graph& g) {
  ForestDecomposition out;
  for (Mask c : components(g, g.vertices())) {
    std::vector<int> members = VertexSet(c).members();
    ComponentKind kind;
    if (g.edges_within(c) >= popcount(c)) {
      kind = ComponentKind::kCyclic;
    } else {
      const bool thin = std::all_of(members.begin(), members.end(),
                                    [&](int v) { return popcount(g.neighbors(v) & c) <= 2; });
      kind = thin ? ComponentKind::kPath : ComponentKind::kTree;
    }
    out.components.push_back(std::move(members));
    out.kinds.push_back(kind);
  }
  return out;
}

CycleBasis cycle_basis(const Graph& g) {
  const int n = g.order();
  CycleBasis basis;
  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (Mask m = g.neighbors(u); m; m &= m - 1) {
        const int v = lowest(m);
        if (seen[v]) continue;
        seen[v] = true;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        basis.tree_edges.push_back({std::min(u, v), std::max(u, v)});
        queue.push(v);
      }
    }
  }

  for (const Edge& e : g.edges()) {
    if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
    // Walk both endpoints up to their lowest common ancestor.
    std::vector<int> up_from_u, up_from_v;
    int a = e.u, b = e.v;
    while (depth[a] > depth[b]) up_from_u.push_back(std::exchange(a, parent[a]));
    while (depth[b] > depth[a]) up_from_v.push_back(std::exchange(b, parent[b]));
    while (a != b) {
      up_from_u.push_back(std::exchange(a, parent[a]));
      up_from_v.push_back(std::exchange(b, parent[b]));
    }
    std::vector<int> cycle = std::move(up_from_u);
    cycle.push_back(a);
    cycle.insert(cycle.end(), up_from_v.rbegin(), up_from_v.rend());
    basis.non_tree_edges.push_back(e);
    basis.cycles.push_back(std::move(cycle));
  }
  basis.dimension = static_cast<int>(basis.cycles.size());
  return basis;
}

}  // namespace eigmult
