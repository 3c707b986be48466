#include "eigmult/deletion.hpp"

#include "eigmult/errors.hpp"
#include "eigmult/path_cover.hpp"
#include "eigmult/subsets.hpp"

namespace eigmult {

namespace {

bool maximizes(Parameter p) { return p == Parameter::kDelta || p == Parameter::kTMinus; }

bool needs_linear(Parameter p) { return p == Parameter::kDelta || p == Parameter::kDeltaPlus; }

// Objective of deleting `removed` from g[within], or nullopt if inadmissible.
std::optional<int> objective_within(const Graph& g, Mask within, Parameter param, Mask removed) {
  const Mask rest = within & ~removed;
  const int q = popcount(removed);
  int count;
  if (needs_linear(param)) {
    if (!is_linear_forest(g, rest)) return std::nullopt;
    count = count_components(g, rest);
  } else {
    if (!is_forest(g, rest)) return std::nullopt;
    count = path_cover_number(g, rest);
  }
  return maximizes(param) ? count - q : count + q;
}

// Best value any set of size >= q could still reach on a component of `order` vertices.
// Used to stop the size-ordered search once no larger set can strictly improve.
int optimistic(Parameter param, int order, int q) {
  const int left = order - q;
  if (maximizes(param)) return left - q;  // at most one path per remaining vertex
  return q + (left > 0 ? 1 : 0);
}

struct ComponentOptimum {
  Mask removed = 0;
  int value = 0;
};

ComponentOptimum optimize_component(const Graph& g, Mask comp, Parameter param, int max_size) {
  ComponentOptimum best;
  bool found = false;
  const int order = popcount(comp);
  for_each_subset_by_size(comp, max_size, [&](Mask s, int q) {
    if (found) {
      const int reach = optimistic(param, order, q);
      if (maximizes(param) ? reach <= best.value : reach >= best.value) return false;
    }
    const auto value = objective_within(g, comp, param, s);
    if (!value) return true;
    if (!found || (maximizes(param) ? *value > best.value : *value < best.value)) {
      best = {s, *value};
      found = true;
    }
    return true;
  });
  if (!found) throw SoundnessError("no admissible deletion set found for " + to_string(param));
  return best;
}

DeletionWitness componentwise(const Graph& g, Parameter param, SearchBound bound) {
  Mask removed = 0;
  for (Mask comp : components(g, g.vertices())) {
    const int limit = bound == SearchBound::kCycleRank ? cycle_rank(g, comp) : popcount(comp);
    removed |= optimize_component(g, comp, param, limit).removed;
  }
  return make_witness(g, param, VertexSet(removed));
}

}  // namespace

std::string to_string(Parameter p) {
  switch (p) {
    case Parameter::kDelta:
      return "delta";
    case Parameter::kDeltaPlus:
      return "delta_plus";
    case Parameter::kTMinus:
      return "t_minus";
    case Parameter::kTPlus:
      return "t_plus";
  }
  return "?";
}

std::optional<int> deletion_objective(const Graph& g, Parameter param, VertexSet s) {
  if (!s.subset_of(VertexSet(g.vertices()))) throw DomainError("deletion set " + to_string(s) + " outside graph");
  return objective_within(g, g.vertices(), param, s.bits());
}

DeletionWitness make_witness(const Graph& g, Parameter param, VertexSet s) {
  const auto value = deletion_objective(g, param, s);
  if (!value) throw PreconditionError(to_string(param) + ": deletion set " + to_string(s) + " is not admissible");
  DeletionWitness w;
  w.parameter = param;
  w.removed = s;
  w.value = *value;
  w.p_or_P = maximizes(param) ? *value + s.size() : *value - s.size();

  const InducedSubgraph rest = delete_vertices(g, s);
  w.decomposition = classify(rest.graph);
  for (auto& comp : w.decomposition.components) {
    for (int& v : comp) v = rest.label_map[v];
  }
  return w;
}

void for_each_feedback_set(const Graph& g, int max_size, const std::function<bool(VertexSet)>& visit) {
  if (max_size < 0) throw DomainError("enumerate_feedback_sets: max_size must be >= 0");
  const Mask all = g.vertices();
  for_each_subset_by_size(all, max_size, [&](Mask s, int) {
    if (!is_forest(g, all & ~s)) return true;
    return visit(VertexSet(s));
  });
}

std::vector<VertexSet> enumerate_feedback_sets(const Graph& g, int max_size) {
  std::vector<VertexSet> out;
  for_each_feedback_set(g, max_size, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

DeletionWitness t_plus(const Graph& g, SearchBound bound) { return componentwise(g, Parameter::kTPlus, bound); }

DeletionWitness t_minus(const Graph& g, SearchBound bound) { return componentwise(g, Parameter::kTMinus, bound); }

DeletionWitness delta(const Graph& g, DeltaMode mode, int cap) {
  if (mode == DeltaMode::kBruteForce) {
    if (g.order() > cap) throw CapExceededError("delta (brute force)", g.order(), cap);
    ComponentOptimum best = optimize_component(g, g.vertices(), Parameter::kDelta, g.order());
    return make_witness(g, Parameter::kDelta, VertexSet(best.removed));
  }

  const DeletionWitness tm = t_minus(g);
  const Mask forest = g.vertices() & ~tm.removed.bits();
  const VertexSet removed(tm.removed.bits() | greedy_join_vertices(g, forest));
  const auto value = deletion_objective(g, Parameter::kDelta, removed);
  if (!value || *value != tm.value) {
    throw SoundnessError("delta: splitting the T- witness at join vertices did not reproduce T-");
  }
  return make_witness(g, Parameter::kDelta, removed);
}

DeletionWitness delta_plus(const Graph& g, int cap) {
  if (g.order() > cap) throw CapExceededError("delta_plus", g.order(), cap);
  return componentwise(g, Parameter::kDeltaPlus, SearchBound::kUnbounded);
}

VertexSet reduce_optimal_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(VertexSet(g.vertices()))) throw DomainError("reduce_optimal_set: set outside graph");
  const Mask all = g.vertices();
  if (!is_forest(g, all & ~s.bits())) {
    throw PreconditionError("reduce_optimal_set: G minus " + to_string(s) + " still has a cycle");
  }

  const CycleBasis basis = cycle_basis(g);
  std::vector<Mask> cycles;
  for (const auto& c : basis.cycles) cycles.push_back(VertexSet::from_list(c).bits());

  auto cycles_through = [&](int v) {
    int count = 0;
    for (Mask c : cycles) count += (c >> v) & 1;
    return count;
  };

  Mask chosen = 0;
  std::vector<bool> covered(cycles.size(), false);
  // Vertices of S that lie on exactly one basis cycle, one per cycle.
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (Mask m = cycles[i] & s.bits(); m; m &= m - 1) {
      if (cycles_through(lowest(m)) == 1) {
        chosen |= bit(lowest(m));
        covered[i] = true;
        break;
      }
    }
  }
  // One vertex of S for each basis cycle not yet hit.
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (covered[i] || (cycles[i] & chosen)) continue;
    const Mask on_cycle = cycles[i] & s.bits();
    if (on_cycle) chosen |= bit(lowest(on_cycle));
  }
  // Hitting every basis cycle need not break every cycle; top up from S.
  for (Mask m = s.bits() & ~chosen; m && !is_forest(g, all & ~chosen); m &= m - 1) chosen |= bit(lowest(m));

  // Inclusion-minimal: each kept vertex has a private cycle, so |S'| <= m - n + k.
  for (int v = g.order() - 1; v >= 0; --v) {
    if ((chosen & bit(v)) && is_forest(g, all & ~(chosen & ~bit(v)))) chosen &= ~bit(v);
  }
  if (popcount(chosen) > cycle_rank(g)) throw SoundnessError("reduce_optimal_set: result exceeds the cycle rank");
  return VertexSet(chosen);
}

}  // namespace eigmult
