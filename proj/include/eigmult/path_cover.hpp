#pragma once

#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult {

struct PathCover {
  // Each path lists its vertices in order; paths start at their smaller endpoint
  // and are sorted by first vertex.
  std::vector<std::vector<int>> paths;

  int size() const { return static_cast<int>(paths.size()); }
};

// Minimum path cover of a forest by the post-order greedy: a vertex absorbs up to two
// open path ends from its children, joining two closes the path at that vertex.
// Throws PreconditionError when f has a cycle.
PathCover min_path_cover(const Graph& f);

// P(f[within]) for an induced forest, without materializing the subgraph. The caller
// guarantees that f[within] is acyclic.
int path_cover_number(const Graph& f, Mask within);

// Vertices where the greedy joined two child paths. Deleting them leaves a linear forest
// with (components - |joined|) == P, i.e. a witness for Delta of the forest.
Mask greedy_join_vertices(const Graph& f, Mask within);

inline constexpr int kPathCoverBruteForceCap = 12;

// Exhaustive oracle for forests: n minus the largest edge subset of maximum degree <= 2.
int path_cover_bruteforce(const Graph& f, int cap = kPathCoverBruteForceCap);

inline constexpr int kInducedPathCoverCap = 12;

// Exact P(G) for an arbitrary graph: minimum partition of V into sets that induce paths,
// by subset dynamic programming (3^n).
int induced_path_cover_exact(const Graph& g, int cap = kInducedPathCoverCap);

}  // namespace eigmult
