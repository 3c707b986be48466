#pragma once

#include <vector>

#include "eigmult/deletion.hpp"
#include "eigmult/graph.hpp"

namespace eigmult {

struct Force {
  int from;
  int to;
  friend bool operator==(const Force&, const Force&) = default;
};

struct ForcingTrace {
  VertexSet initial;
  std::vector<Force> forces;
  VertexSet final_set;

  bool forces_all(const Graph& g) const { return final_set.bits() == g.vertices(); }
};

// Applies the colour-change rule to a fixed point. Each pass scans colored vertices in
// ascending order and applies every force that is legal at that moment.
ForcingTrace forcing_closure(const Graph& g, VertexSet initial);

// Closure set only, without recording the trace.
Mask closure_mask(const Graph& g, Mask initial);

struct ZeroForcingResult {
  int z = 0;
  VertexSet witness;  // lexicographically first minimum zero forcing set
};

inline constexpr int kZeroForcingCap = 16;

ZeroForcingResult zero_forcing_number(const Graph& g, int cap = kZeroForcingCap);

// S plus one endpoint of every path in a minimum path cover of G\S, for a T+ witness S.
// Lowest-label endpoints are tried first, then every endpoint orientation. The result is
// checked to force all of G; SoundnessError if no orientation does.
VertexSet forcing_set_from_tplus(const Graph& g, const DeletionWitness& w);

}  // namespace eigmult
