#include "eigmult/harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/path_cover.hpp"
#include "eigmult/structure.hpp"
#include "eigmult/zero_forcing.hpp"

namespace eigmult {

namespace {

constexpr std::uint64_t kChunk = 1u << 12;

int pair_count(int n) { return n * (n - 1) / 2; }

void require_order(int n, int limit, const char* who) {
  if (n < 1 || n > limit) {
    throw DomainError(std::string(who) + ": order " + std::to_string(n) + " outside 1.." + std::to_string(limit));
  }
}

bool connected(const Graph& g) { return count_components(g, g.vertices()) == 1; }

int resolve_threads(int requested) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, requested > 0 ? requested : hw);
}

// Applies f to every graph of order n in chunks across threads. Results keep
// enumeration order regardless of scheduling.
template <class T, class F>
std::vector<T> sweep_order(int n, bool connected_only, int threads, F f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<T>> parts(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t end = std::min(total, (c + 1) * kChunk);
      for (std::uint64_t mask = c * kChunk; mask < end; ++mask) {
        const Graph g = graph_from_pair_mask(n, mask);
        if (connected_only && !connected(g)) continue;
        if (auto out = f(g)) parts[c].push_back(std::move(*out));
      }
    }
  };

  const int count = static_cast<int>(std::min<std::uint64_t>(resolve_threads(threads), chunks));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  std::vector<T> merged;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(merged));
  return merged;
}

Violation make_violation(const ParameterReport& r, const char* left, int lv, const char* rel, const char* right,
                         int rv) {
  return {r.graph6, left, lv, rel, right, rv};
}

}  // namespace

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int i = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++i) {
      if ((mask >> i) & 1) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

void for_each_small_graph(int n, bool connected_only, const std::function<bool(const Graph&)>& visit) {
  require_order(n, kMaxEnumerationOrder, "enumerate_small_graphs");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = graph_from_pair_mask(n, mask);
    if (connected_only && !connected(g)) continue;
    if (!visit(g)) return;
  }
}

std::vector<Graph> enumerate_small_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_small_graph(n, connected_only, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

ParameterReport compute_report(const Graph& g, const ReportOptions& options) {
  ParameterReport r;
  r.graph6 = emit_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.is_forest = is_forest(g, g.vertices());

  r.witnesses.t_minus = t_minus(g);
  r.witnesses.t_plus = t_plus(g);
  r.witnesses.delta = r.n <= kDeltaBruteForceCap ? delta(g, DeltaMode::kBruteForce) : delta(g);
  r.witnesses.delta_plus = delta_plus(g);
  const ZeroForcingResult zf = zero_forcing_number(g);
  r.witnesses.z = zf.witness;

  r.t_minus = r.witnesses.t_minus.value;
  r.t_plus = r.witnesses.t_plus.value;
  r.delta = r.witnesses.delta.value;
  r.delta_plus = r.witnesses.delta_plus.value;
  r.z = zf.z;
  if (r.n <= kInducedPathCoverCap) r.p_bruteforce = induced_path_cover_exact(g);

  // A broken chain is reported by check_report, not thrown from the sandwich.
  if (r.t_minus <= std::min(r.z, r.t_plus)) {
    SandwichReport bounds;
    bounds.t_minus = r.t_minus;
    bounds.z = r.z;
    bounds.t_plus = r.t_plus;
    bounds.delta_plus = r.delta_plus;
    const SandwichReport s = m_sandwich(g, bounds, options.with_numeric, options.certificate);
    r.m_lower_numeric = s.numeric_lower;
    r.m_exact = s.m_exact;
  }
  r.chain_ok = chain_holds(r);
  return r;
}

bool chain_holds(const ParameterReport& r) {
  return r.t_minus == r.delta && r.delta <= r.z && r.z <= r.t_plus && r.t_plus <= r.delta_plus &&
         r.delta_plus <= r.n;
}

std::string to_string(const Violation& v) {
  return v.graph6 + ": expected " + v.left + " " + v.relation + " " + v.right + ", got " +
         std::to_string(v.left_value) + " vs " + std::to_string(v.right_value);
}

std::optional<Violation> check_report(const ParameterReport& r) {
  if (r.t_minus != r.delta) return make_violation(r, "t_minus", r.t_minus, "==", "delta", r.delta);
  if (r.delta > r.z) return make_violation(r, "delta", r.delta, "<=", "z", r.z);
  if (r.z > r.t_plus) return make_violation(r, "z", r.z, "<=", "t_plus", r.t_plus);
  if (r.t_plus > r.delta_plus) return make_violation(r, "t_plus", r.t_plus, "<=", "delta_plus", r.delta_plus);
  if (r.delta_plus > r.n) return make_violation(r, "delta_plus", r.delta_plus, "<=", "n", r.n);
  if (r.p_bruteforce && *r.p_bruteforce > r.t_plus) {
    return make_violation(r, "p_bruteforce", *r.p_bruteforce, "<=", "t_plus", r.t_plus);
  }
  if (r.is_forest) {
    if (r.t_minus != r.t_plus) return make_violation(r, "t_minus", r.t_minus, "==", "t_plus", r.t_plus);
    if (r.m_exact && *r.m_exact != r.t_minus) {
      return make_violation(r, "m_exact", *r.m_exact, "==", "t_minus", r.t_minus);
    }
  }
  return std::nullopt;
}

std::vector<Violation> check_reports(const std::vector<ParameterReport>& reports) {
  std::vector<Violation> out;
  for (const auto& r : reports) {
    if (auto v = check_report(r)) out.push_back(std::move(*v));
  }
  return out;
}

ChainSweep verify_chain_corpus(int max_n, const SweepOptions& options) {
  require_order(max_n, options.allow_order_seven ? kMaxEnumerationOrder : 6, "verify_chain_corpus");
  ChainSweep sweep;
  std::atomic<std::uint64_t> seen{0};
  for (int n = 1; n <= max_n; ++n) {
    auto found = sweep_order<Violation>(n, options.connected_only, options.threads, [&](const Graph& g) {
      ++seen;
      return check_report(compute_report(g));
    });
    std::move(found.begin(), found.end(), std::back_inserter(sweep.violations));
    if (options.progress) options.progress(n, seen.load());
  }
  sweep.graphs = seen.load();
  return sweep;
}

std::vector<ParameterReport> corpus_reports(int max_n, const SweepOptions& options) {
  require_order(max_n, options.allow_order_seven ? kMaxEnumerationOrder : 6, "corpus_reports");
  std::vector<ParameterReport> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = sweep_order<ParameterReport>(n, options.connected_only, options.threads,
                                             [](const Graph& g) { return std::optional(compute_report(g)); });
    std::move(part.begin(), part.end(), std::back_inserter(out));
    if (options.progress) options.progress(n, out.size());
  }
  return out;
}

std::vector<NamedGraph> reference_graphs() {
  return {
      {"fig1", generate_family(Family::kFig1, 0)},
      {"genstar", generate_family(Family::kGeneralizedStar, 3)},
      {"fig3", generate_family(Family::kFig3, 0)},
      {"fig4", generate_family(Family::kFig4, 0)},
      {"cycle5", generate_family(Family::kCycle, 5)},
  };
}

Survey survey_open_questions(int max_n, const SweepOptions& options) {
  SweepOptions bounded = options;
  bounded.allow_order_seven = false;
  std::vector<ParameterReport> reports = corpus_reports(max_n, bounded);

  Survey survey;
  survey.max_n = max_n;
  survey.graphs = reports.size();
  survey.reference = reference_graphs();

  std::set<std::string> seen;
  for (const auto& r : reports) seen.insert(r.graph6);
  for (const auto& ref : survey.reference) {
    ParameterReport r = compute_report(ref.graph);
    if (seen.insert(r.graph6).second) reports.push_back(std::move(r));
  }

  survey.classes = {
      {"t_minus == t_plus", "t_minus < t_plus", {}, {}},
      {"z == t_plus", "z < t_plus", {}, {}},
      {"p == t_plus", "p < t_plus", {}, {}},
      {"delta == delta_plus", "delta < delta_plus", {}, {}},
  };
  auto file = [&](SurveyClass& c, bool holds, const std::string& g6) { (holds ? c.holds : c.fails).push_back(g6); };
  for (const auto& r : reports) {
    file(survey.classes[0], r.t_minus == r.t_plus, r.graph6);
    file(survey.classes[1], r.z == r.t_plus, r.graph6);
    if (r.p_bruteforce) file(survey.classes[2], *r.p_bruteforce == r.t_plus, r.graph6);
    file(survey.classes[3], r.delta == r.delta_plus, r.graph6);
  }
  return survey;
}

nlohmann::json survey_to_json(const Survey& s) {
  nlohmann::json reference = nlohmann::json::array();
  for (const auto& ref : s.reference) reference.push_back({{"name", ref.name}, {"graph6", emit_graph6(ref.graph)}});
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : s.classes) {
    classes.push_back({
        {"question", c.question},
        {"complement", c.complement},
        {"holds_count", c.holds.size()},
        {"fails_count", c.fails.size()},
        {"holds", c.holds},
        {"fails", c.fails},
    });
  }
  return {{"max_n", s.max_n}, {"corpus_graphs", s.graphs}, {"reference", reference}, {"classes", classes}};
}

}  // namespace eigmult
