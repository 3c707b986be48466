#pragma once

#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult {

// Mask-level helpers. `within` restricts the graph to an induced subgraph without copying it.

// Vertices reachable from v inside `within` (v must be in `within`).
Mask component_of(const Graph& g, Mask within, int v);

// Connected components of g[within], each as a mask, ordered by smallest vertex.
std::vector<Mask> components(const Graph& g, Mask within);
int count_components(const Graph& g, Mask within);

bool is_forest(const Graph& g, Mask within);
// Forest with every vertex of degree <= 2 inside `within`.
bool is_linear_forest(const Graph& g, Mask within);

// m - n + k of the induced subgraph.
int cycle_rank(const Graph& g, Mask within);
inline int cycle_rank(const Graph& g) { return cycle_rank(g, g.vertices()); }

struct InducedSubgraph {
  Graph graph;
  // label_map[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> label_map;

  Mask lift(Mask local) const;
};

// Induced subgraph on the vertices outside `removed`, relabelled order-preservingly.
InducedSubgraph delete_vertices(const Graph& g, VertexSet removed);
// Induced subgraph on `kept`, relabelled order-preservingly.
InducedSubgraph induced_subgraph(const Graph& g, Mask kept);

enum class ComponentKind { kPath, kTree, kCyclic };

const char* to_string(ComponentKind k);

struct ForestDecomposition {
  std::vector<std::vector<int>> components;  // ascending vertex lists, ordered by first vertex
  std::vector<ComponentKind> kinds;

  bool is_forest() const;
  bool is_linear_forest() const;
  int path_count() const;
};

ForestDecomposition classify(const Graph& g);

struct CycleBasis {
  std::vector<Edge> tree_edges;
  std::vector<Edge> non_tree_edges;
  // cycles[i] is the fundamental cycle of non_tree_edges[i], listed in traversal order
  // starting at the edge's first endpoint and ending at its second.
  std::vector<std::vector<int>> cycles;
  int dimension = 0;
};

// Breadth-first spanning forest rooted at the smallest vertex of each component.
CycleBasis cycle_basis(const Graph& g);

}  // namespace eigmult
