#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eigmult/graph.hpp"
#include "eigmult/structure.hpp"

namespace eigmult {

// The four vertex-deletion parameters. For a deletion set S with G\S acyclic:
//   Delta      max  p - |S|        over S with G\S a linear forest of p paths
//   DeltaPlus  min  p + |S|        over the same S
//   TMinus     max  P(G\S) - |S|   over S with G\S a forest
//   TPlus      min  P(G\S) + |S|   over the same S
enum class Parameter { kDelta, kDeltaPlus, kTMinus, kTPlus };

std::string to_string(Parameter p);

struct DeletionWitness {
  Parameter parameter = Parameter::kTPlus;
  VertexSet removed;
  int value = 0;
  // Components of G\S, labelled with vertices of G.
  ForestDecomposition decomposition;
  // Number of paths left (Delta, DeltaPlus) or P(G\S) (TMinus, TPlus).
  int p_or_P = 0;
};

// Objective of `s` for the parameter, or nullopt when s is not admissible
// (G\S not a linear forest for Delta/DeltaPlus, not a forest for TMinus/TPlus).
std::optional<int> deletion_objective(const Graph& g, Parameter param, VertexSet s);

// Builds the witness record for an admissible set.
DeletionWitness make_witness(const Graph& g, Parameter param, VertexSet s);

// Visits every S with |S| <= max_size and G\S acyclic, by size then lexicographically.
// Return false from `visit` to stop.
void for_each_feedback_set(const Graph& g, int max_size, const std::function<bool(VertexSet)>& visit);
std::vector<VertexSet> enumerate_feedback_sets(const Graph& g, int max_size);

enum class SearchBound {
  kCycleRank,  // per component, |S| <= m - n + 1
  kUnbounded,  // every subset; used to cross-check the bounded search
};

// Optimum per connected component, summed; the witness is the union of the per-component
// canonical sets (smallest, then lexicographically first).
DeletionWitness t_plus(const Graph& g, SearchBound bound = SearchBound::kCycleRank);
DeletionWitness t_minus(const Graph& g, SearchBound bound = SearchBound::kCycleRank);

inline constexpr int kDeltaBruteForceCap = 16;
inline constexpr int kDeltaPlusCap = 16;

enum class DeltaMode {
  kViaTMinus,   // T-minus search, then split each remaining tree at its greedy join vertices
  kBruteForce,  // every subset of V; the oracle
};

DeletionWitness delta(const Graph& g, DeltaMode mode = DeltaMode::kViaTMinus, int cap = kDeltaBruteForceCap);

// Exhaustive by increasing |S| with a bound cut-off; throws CapExceededError above `cap`.
DeletionWitness delta_plus(const Graph& g, int cap = kDeltaPlusCap);

// Shrinks a deletion set that leaves a forest to a subset S' of size <= m - n + k that
// still leaves a forest: one vertex of S per fundamental cycle, topped up if needed, then
// pruned until inclusion-minimal. Throws PreconditionError when G\S has a cycle.
VertexSet reduce_optimal_set(const Graph& g, VertexSet s);

}  // namespace eigmult
