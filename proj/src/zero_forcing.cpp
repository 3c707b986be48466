#include "eigmult/zero_forcing.hpp"

#include "eigmult/errors.hpp"
#include "eigmult/path_cover.hpp"
#include "eigmult/subsets.hpp"

namespace eigmult {

ForcingTrace forcing_closure(const Graph& g, VertexSet initial) {
  if (!initial.subset_of(VertexSet(g.vertices()))) {
    throw DomainError("forcing_closure: initial set " + to_string(initial) + " outside graph");
  }
  ForcingTrace trace;
  trace.initial = initial;
  Mask colored = initial.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = colored; m; m &= m - 1) {
      const int u = lowest(m);
      const Mask white = g.neighbors(u) & ~colored;
      if (popcount(white) != 1) continue;
      const int v = lowest(white);
      colored |= white;
      trace.forces.push_back({u, v});
      changed = true;
    }
  }
  trace.final_set = VertexSet(colored);
  return trace;
}

Mask closure_mask(const Graph& g, Mask colored) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = colored; m; m &= m - 1) {
      const Mask white = g.neighbors(lowest(m)) & ~colored;
      if (white && !(white & (white - 1))) {
        colored |= white;
        changed = true;
      }
    }
  }
  return colored;
}

ZeroForcingResult zero_forcing_number(const Graph& g, int cap) {
  if (g.order() > cap) throw CapExceededError("zero_forcing_number", g.order(), cap);
  const Mask all = g.vertices();
  ZeroForcingResult result;
  bool found = false;
  for_each_subset_by_size(all, g.order(), [&](Mask s, int k) {
    if (closure_mask(g, s) != all) return true;
    result = {k, VertexSet(s)};
    found = true;
    return false;
  });
  if (!found) throw SoundnessError("zero_forcing_number: V itself failed to force");
  return result;
}

VertexSet forcing_set_from_tplus(const Graph& g, const DeletionWitness& w) {
  const InducedSubgraph rest = delete_vertices(g, w.removed);
  const PathCover cover = min_path_cover(rest.graph);
  const int p = cover.size();
  if (p >= 31) throw DomainError("forcing_set_from_tplus: too many cover paths for orientation search");

  // Bit i of `orientation` picks the back endpoint of path i.
  for (std::uint32_t orientation = 0; orientation < (std::uint32_t{1} << p); ++orientation) {
    Mask start = w.removed.bits();
    for (int i = 0; i < p; ++i) {
      const auto& path = cover.paths[i];
      const int local = ((orientation >> i) & 1) ? path.back() : path.front();
      start |= bit(rest.label_map[local]);
    }
    if (closure_mask(g, start) == g.vertices()) return VertexSet(start);
  }
  throw SoundnessError("forcing_set_from_tplus: no endpoint orientation forces the graph");
}

}  // namespace eigmult
