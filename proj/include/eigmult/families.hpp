#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "eigmult/graph.hpp"

namespace eigmult {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kWheel,
  kSun,
  kComplete,
  kGeneralizedStar,
  kUnicyclic,
  kFig1,
  kFig3,
  kFig4,
};

// Accepts the CLI names: path cycle star wheel sun complete genstar unicyclic fig1 fig3 fig4
// (plus the long forms generalized_star and unicyclic_family).
std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);

// Family-specific integer parameters, keyed by name.
//   genstar:   leg_length (default 2); n is the number of legs.
//   unicyclic: chord_path_length (default 2, >= 2), offset (default 1); n is the path order (>= 5).
using FamilyParams = std::map<std::string, int>;

// Vertex numbering conventions:
//   path       0-1-...-(n-1)
//   cycle      path plus {n-1, 0}
//   star       centre 0, leaves 1..n-1
//   wheel      rim cycle on 0..n-2, hub n-1
//   sun        cycle 0..n-1, pendant n+i attached to i (2n vertices)
//   genstar    centre 0; leg i occupies 1+i*L .. L+i*L, outward from the centre
//   unicyclic  path 0..n-1 with u=offset, w=offset+2; the u-w path adds vertices n, n+1, ...
//   fig1/fig3/fig4  the fixed example graphs, 1-based labels shifted down by one
Graph generate_family(Family kind, int n, const FamilyParams& extra = {});

}  // namespace eigmult
